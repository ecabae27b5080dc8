#include "halphen/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace halphen {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }

Poly Poly::monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Scalar>& roots) {
    Poly p(1);
    for (const auto& r : roots) p *= Poly({-r, Scalar(1)});
    return p;
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
    if (l.is_zero() || r.is_zero()) return Poly();
    std::vector<Scalar> out(l.c_.size() + r.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < l.c_.size(); ++i) {
        if (l.c_[i].is_zero()) continue;
        for (size_t j = 0; j < r.c_.size(); ++j)
            out[i + j] += l.c_[i] * r.c_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Scalar& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    std::vector<Scalar> q(num.degree() - den.degree() + 1, Scalar(0));
    Scalar inv_lead = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        Scalar f = rem.leading() * inv_lead;
        q[k] = f;
        rem -= Poly::monomial(f, k) * den;
    }
    return {Poly(std::move(q)), rem};
}

Poly operator/(const Poly& num, const Poly& den) { return Poly::divmod(num, den).first; }
Poly operator%(const Poly& num, const Poly& den) { return Poly::divmod(num, den).second; }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Scalar(Int(i)) * c_[i];
    return Poly(std::move(out));
}

Scalar Poly::eval(const Scalar& x0) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Poly Poly::shifted(const Scalar& t) const {
    // Horner in (x + t)
    Poly acc;
    Poly lin({t, Scalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::scaled_arg(const Scalar& s) const {
    Poly r = *this;
    Scalar p(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= p;
        p *= s;
    }
    r.trim();
    return r;
}

Poly Poly::reversed() const {
    std::vector<Scalar> out(c_.rbegin(), c_.rend());
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Rat Poly::content() const {
    Int num_gcd = 0, den_lcm = 1;
    auto absorb = [&](const Rat& r) {
        if (r == 0) return;
        num_gcd = gcd(num_gcd, numerator(r) < 0 ? Int(-numerator(r)) : numerator(r));
        den_lcm = lcm(den_lcm, denominator(r));
    };
    for (const auto& s : c_) {
        absorb(s.rational_part());
        absorb(s.root_part());
    }
    if (num_gcd == 0) return Rat(0);
    return Rat(num_gcd, den_lcm);
}

Poly Poly::primitive() const {
    Rat c = content();
    if (c == 0 || c == 1) return *this;
    return Scalar(Rat(1) / c) * *this;
}

long long Poly::ext_d() const {
    for (const auto& s : c_)
        if (s.ext_d() != 0) return s.ext_d();
    return 0;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& s = c_[k];
        if (s.is_zero()) continue;
        std::string term;
        bool neg = false;
        Scalar val = s;
        if (s.is_rational() && s.rational_part() < 0) { neg = true; val = -s; }
        std::string coeff = val.str();
        bool coeff_one = (coeff == "1");
        if (k == 0) term = coeff;
        else {
            std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
            if (coeff_one) term = xs;
            else if (val.is_rational()) term = coeff + "*" + xs;
            else term = "(" + coeff + ")*" + xs;
        }
        if (first) {
            os << (neg ? "-" : "") << term;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << term;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = std::move(v);
        v = std::move(r);
        if (!v.is_zero()) v = v.monic(); // keeps coefficient growth in check
    }
    if (u.is_zero()) return u;
    return u.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = gcd(a, b);
    return ((a / g) * b).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("zero input");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a0 = gcd(f, fp);
    Poly b = f / a0;
    Poly c = fp / a0;
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        if (ai.degree() > 0) {
            // report factors integer-primitive when rational (5x^2-10x+1, not x^2-2x+1/5)
            out.emplace_back(ai.ext_d() == 0 ? ai.primitive() : ai, i);
        }
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Poly g = gcd(num, den);
    if (!g.is_zero() && g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    Scalar lead = den.leading();
    num_ = lead.inverse() * num;
    den_ = lead.inverse() * den;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& l, const RatFun& r) {
    return RatFun(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
}
RatFun operator-(const RatFun& l, const RatFun& r) {
    return RatFun(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
}
RatFun operator*(const RatFun& l, const RatFun& r) {
    return RatFun(l.num_ * r.num_, l.den_ * r.den_);
}
RatFun operator/(const RatFun& l, const RatFun& r) {
    if (r.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(l.num_ * r.den_, l.den_ * r.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Scalar RatFun::eval(const Scalar& x0) const {
    Scalar d = den_.eval(x0);
    if (d.is_zero()) throw std::domain_error("pole at evaluation point");
    return num_.eval(x0) / d;
}

std::string RatFun::str(const std::string& var) const {
    if (is_poly()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFun compose(const Poly& p, const RatFun& w) {
    RatFun acc(Poly(0));
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * w + RatFun(Poly(p.coeff(k)));
    }
    return acc;
}

} // namespace halphen
