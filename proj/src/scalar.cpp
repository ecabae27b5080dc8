#include "halphen/scalar.hpp"

#include <boost/multiprecision/integer.hpp>

namespace halphen {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

Scalar::Scalar(const Rat& a, const Rat& b, long long d) : a_(a), b_(b), d_(d) {
    if (b_ != 0) {
        if (d_ == 0 || d_ == 1)
            throw std::invalid_argument("extension tag must be a squarefree integer != 0, 1");
    }
    reduce();
}

Scalar Scalar::rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Scalar(Rat(num, den));
}

Scalar Scalar::root_of(long long d) {
    return Scalar(Rat(0), Rat(1), d);
}

const Rat& Scalar::to_rational() const {
    if (b_ != 0) throw std::domain_error("scalar is not rational");
    return a_;
}

long long Scalar::merge_d(long long x, long long y) {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x != y) throw field_mismatch();
    return x;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge_d(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge_d(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long long d = merge_d(d_, o.d_);
    Rat na = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (b_ == 0) return Scalar(Rat(1) / a_);
    Rat n = norm();
    if (n == 0) throw std::domain_error("division by zero divisor in extension");
    return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

int Scalar::cmp(const Scalar& l, const Scalar& r) {
    if (l.a_ != r.a_) return l.a_ < r.a_ ? -1 : 1;
    if (l.b_ != r.b_) return l.b_ < r.b_ ? -1 : 1;
    if (l.d_ != r.d_) return l.d_ < r.d_ ? -1 : 1;
    return 0;
}

std::string rat_str(const Rat& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

std::string Scalar::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string bs;
    if (b_ == 1) bs = root;
    else if (b_ == -1) bs = "-" + root;
    else bs = rat_str(b_) + "*" + root;
    if (a_ == 0) return bs;
    if (b_ > 0) return rat_str(a_) + "+" + (b_ == 1 ? root : rat_str(b_) + "*" + root);
    return rat_str(a_) + "-" + (b_ == -1 ? root : rat_str(-b_) + "*" + root);
}

long long squarefree_part(const Int& n) {
    if (n == 0) throw std::domain_error("squarefree part of zero");
    Int m = abs(n);
    Int sf = 1;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e % 2) sf *= p;
        }
        if (p > 2000000) {
            // residual has no small square factor candidates we can afford to find
            break;
        }
    }
    sf *= m;
    if (n < 0) sf = -sf;
    if (sf < std::numeric_limits<long long>::min() || sf > std::numeric_limits<long long>::max())
        throw std::domain_error("squarefree part too large for an extension tag");
    return static_cast<long long>(sf);
}

std::optional<Rat> rat_sqrt(const Rat& v) {
    if (v < 0) return std::nullopt;
    if (v == 0) return Rat(0);
    Int n = numerator(v), d = denominator(v);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rat(rn, rd);
}

std::optional<Scalar> scalar_sqrt(const Scalar& v) {
    if (v.is_zero()) return Scalar(0);
    if (v.is_rational()) {
        const Rat& r = v.rational_part();
        if (auto s = rat_sqrt(r)) return Scalar(*s);
        // sqrt(p/q) = sqrt(p*q)/q = (m/q) * sqrt(d), p*q = m^2 d
        Int pq = numerator(r) * denominator(r);
        long long d = squarefree_part(pq);
        Int m2 = pq / d;
        auto m = rat_sqrt(Rat(m2));
        if (!m) return std::nullopt; // squarefree part was incomplete
        return Scalar(Rat(0), *m / Rat(denominator(r)), d);
    }
    // (u + w sqrt(d))^2 = a + b sqrt(d):  u^2 + w^2 d = a, 2uw = b.
    // u^2 = (a +- sqrt(a^2 - b^2 d)) / 2 must be a rational square.
    Rat a = v.rational_part(), b = v.root_part();
    auto n = rat_sqrt(v.norm());
    if (!n) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rat u2 = (a + Rat(sign) * *n) / 2;
        if (u2 < 0) continue;
        if (auto u = rat_sqrt(u2)) {
            if (*u == 0) continue;
            Rat w = b / (2 * *u);
            Scalar cand(*u, w, v.ext_d());
            if (cand * cand == v) return cand;
        }
    }
    return std::nullopt;
}

} // namespace halphen
