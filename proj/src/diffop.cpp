#include "halphen/diffop.hpp"

#include <algorithm>
#include <sstream>

namespace halphen {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;

DiffOp::DiffOp(std::vector<Poly> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw std::invalid_argument("zero operator");
}

DiffOp DiffOp::primitive() const {
    DiffOp out = *this;
    // remove common polynomial factor
    Poly g;
    for (const auto& p : out.c)
        if (!p.is_zero()) g = g.is_zero() ? p : gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : out.c) p = p / g;
    // remove scalar content
    Rat cont(0);
    {
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& p : out.c) {
            Rat pc = p.content();
            if (pc == 0) continue;
            num_gcd = gcd(num_gcd, numerator(pc));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(pc));
        }
        if (num_gcd != 0) cont = Rat(num_gcd, den_lcm);
    }
    if (cont != 0 && cont != 1) {
        Scalar inv{Rat(1) / cont};
        for (auto& p : out.c) p = inv * p;
    }
    // sign: leading coefficient of the top polynomial positive (rational part,
    // or root part when the rational part vanishes)
    const Scalar& lead = out.c.back().leading();
    const Rat& key = lead.rational_part() != 0 ? lead.rational_part() : lead.root_part();
    if (key < 0)
        for (auto& p : out.c) p = -p;
    return out;
}

DiffOp DiffOp::from_ratfun_coeffs(const std::vector<RatFun>& coeffs) {
    if (coeffs.empty() || coeffs.back().is_zero())
        throw std::invalid_argument("zero leading coefficient");
    const RatFun& top = coeffs.back();
    std::vector<RatFun> monic;
    monic.reserve(coeffs.size());
    for (const auto& q : coeffs) monic.push_back(q / top);
    Poly den(1);
    for (const auto& q : monic) den = lcm(den, q.den());
    std::vector<Poly> out;
    out.reserve(monic.size());
    for (const auto& q : monic) out.push_back(q.num() * (den / q.den()));
    return DiffOp(std::move(out)).primitive();
}

bool DiffOp::equal_up_to_scalar(const DiffOp& o) const {
    if (order() != o.order()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j)
            if (!(c[i] * o.c[j] - c[j] * o.c[i]).is_zero()) return false;
    return true;
}

std::string DiffOp::str() const {
    static const char* names[] = {"y", "y'", "y''", "y'''", "y''''"};
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        if (c[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c[k].str() << ")*" << (k <= 4 ? names[k] : "y^(" + std::to_string(k) + ")");
        first = false;
    }
    os << " = 0";
    return os.str();
}

MoebiusMap::MoebiusMap(Scalar a_, Scalar b_, Scalar c_, Scalar d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if ((a * d - b * c).is_zero()) throw std::invalid_argument("degenerate Moebius map");
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap(d, -b, -c, a);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& i) const {
    return MoebiusMap(a * i.a + b * i.c, a * i.b + b * i.d,
                      c * i.a + d * i.c, c * i.b + d * i.d);
}

std::optional<Scalar> MoebiusMap::apply(const Scalar& x) const {
    Scalar den = c * x + d;
    if (den.is_zero()) return std::nullopt;
    return (a * x + b) / den;
}

std::optional<Scalar> MoebiusMap::apply_infinity() const {
    if (c.is_zero()) return std::nullopt;
    return a / c;
}

int RiemannScheme::singular_count() const {
    int n = 0;
    for (const auto& p : points) n += p.multiplicity();
    return n;
}

Scalar RiemannScheme::exponent_sum() const {
    Scalar s(0);
    for (const auto& p : points) {
        Scalar local(0);
        for (const auto& e : p.exponents) local += e;
        if (p.kind == SchemePoint::Kind::ExtPair) {
            // conjugate point contributes the conjugate exponents
            for (const auto& e : p.exponents) local += e.conj();
        }
        s += local;
    }
    return s;
}

std::string RiemannScheme::str() const {
    std::ostringstream os;
    for (const auto& p : points) {
        if (p.is_infinity()) os << "oo";
        else if (p.kind == SchemePoint::Kind::ExtPair) os << "roots(" << p.factor.str() << ")";
        else os << p.value.str();
        os << ": {";
        for (size_t i = 0; i < p.exponents.size(); ++i)
            os << (i ? ", " : "") << p.exponents[i].str();
        os << "}  ";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// factorization helpers

namespace {

std::vector<Int> divisors_capped(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    for (Int p = 2; p * p <= m && p < 2000000; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Int> divs{1};
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) throw std::domain_error("cannot factor: too many divisor candidates");
    }
    return divs;
}

// rational roots of a squarefree rational-coefficient polynomial; deflates p
std::vector<Scalar> extract_rational_roots(Poly& p) {
    std::vector<Scalar> roots;
    // roots at zero
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        roots.emplace_back(0);
        std::vector<Scalar> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(std::move(shifted));
    }
    if (p.degree() < 1) return roots;
    Poly q = p.primitive();
    // integer-clear
    Int den_lcm = 1;
    for (const auto& s : q.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(s.rational_part()));
    q = Scalar(Rat(den_lcm)) * q;
    Int a0 = numerator(q.coeff(0).to_rational());
    Int an = numerator(q.leading().to_rational());
    auto ps = divisors_capped(a0);
    auto qs = divisors_capped(an);
    for (const Int& pp : ps) {
        for (const Int& qq : qs) {
            if (gcd(pp, qq) != 1) continue;
            for (int sgn : {1, -1}) {
                Scalar cand{Rat(sgn * pp, qq)};
                while (p.degree() >= 1 && p.eval(cand).is_zero()) {
                    roots.push_back(cand);
                    p = p / Poly({-cand, Scalar(1)});
                }
            }
        }
    }
    return roots;
}

// split a monic rational quartic (no rational roots) into two rational
// quadratics via the resolvent cubic, if possible
std::optional<std::pair<Poly, Poly>> split_quartic(const Poly& f) {
    Scalar p = f.coeff(3), q = f.coeff(2), r = f.coeff(1), s = f.coeff(0);
    // resolvent cubic for z = b + d in (x^2+ax+b)(x^2+cx+d)
    Poly res({-(p * p * s - Scalar(4) * q * s + r * r), p * r - Scalar(4) * s, -q, Scalar(1)});
    Poly work = res;
    auto zs = extract_rational_roots(work);
    for (const Scalar& z : zs) {
        // a + c = p, ac = q - z
        Scalar disc = p * p - Scalar(4) * (q - z);
        auto sq = scalar_sqrt(disc);
        if (!sq || !sq->is_rational()) continue;
        Scalar a = (p + *sq) / Scalar(2);
        Scalar cc = p - a;
        Scalar b, d;
        if (a != cc) {
            // b(c - a) = r - a z
            b = (r - a * z) / (cc - a);
            d = z - b;
        } else {
            // a == c: b + d = z, bd = s
            Scalar disc2 = z * z - Scalar(4) * s;
            auto sq2 = scalar_sqrt(disc2);
            if (!sq2 || !sq2->is_rational()) continue;
            b = (z + *sq2) / Scalar(2);
            d = z - b;
        }
        Poly f1({b, a, Scalar(1)});
        Poly f2({d, cc, Scalar(1)});
        if (f1 * f2 == f) return std::make_pair(f1, f2);
    }
    return std::nullopt;
}

} // namespace

std::vector<Scalar> small_roots(const Poly& p) {
    if (p.degree() <= 0) return {};
    Poly w = p;
    if (p.degree() == 1)
        return {-p.coeff(0) / p.coeff(1)};
    if (p.degree() == 2) {
        Scalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        Scalar disc = b * b - Scalar(4) * a * c;
        auto sq = scalar_sqrt(disc);
        if (!sq) throw std::domain_error("cannot express roots of " + p.str() + " in a quadratic extension");
        Scalar two_a = Scalar(2) * a;
        return {(-b + *sq) / two_a, (-b - *sq) / two_a};
    }
    if (p.degree() == 3 && p.ext_d() == 0) {
        Poly work = p;
        auto rs = extract_rational_roots(work);
        if (!rs.empty() && work.degree() <= 2) {
            auto rest = small_roots(work);
            rs.insert(rs.end(), rest.begin(), rest.end());
            return rs;
        }
    }
    throw std::domain_error("cannot express roots of " + p.str());
}

std::vector<std::variant<Scalar, Poly>> factor_points(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (p.ext_d() != 0) {
        // over an extension: only linear and quadratic splitting supported
        std::vector<std::variant<Scalar, Poly>> out;
        for (auto& [f, mult] : squarefree_decompose(p)) {
            for (const Scalar& r : small_roots(f)) out.emplace_back(r);
        }
        return out;
    }
    std::vector<std::variant<Scalar, Poly>> out;
    for (auto& [f0, mult] : squarefree_decompose(p)) {
        Poly f = f0.monic();
        auto roots = extract_rational_roots(f);
        for (const Scalar& r : roots) out.emplace_back(r);
        while (f.degree() >= 2) {
            if (f.degree() == 2) {
                Scalar disc = f.coeff(1) * f.coeff(1) - Scalar(4) * f.coeff(2) * f.coeff(0);
                if (rat_sqrt(disc.to_rational())) {
                    for (const Scalar& r : small_roots(f)) out.emplace_back(r);
                } else {
                    out.emplace_back(f.ext_d() == 0 ? f.primitive() : f);
                }
                f = Poly(1);
            } else if (f.degree() == 4) {
                auto sp = split_quartic(f);
                if (!sp) throw std::domain_error("cannot factor quartic " + f.str());
                for (const Poly& g : {sp->first, sp->second}) {
                    Scalar disc = g.coeff(1) * g.coeff(1) - Scalar(4) * g.coeff(0);
                    if (rat_sqrt(disc.to_rational())) {
                        for (const Scalar& r : small_roots(g)) out.emplace_back(r);
                    } else {
                        out.emplace_back(g.primitive());
                    }
                }
                f = Poly(1);
            } else {
                throw std::domain_error("cannot factor " + f.str());
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// substitution machinery

DiffOp pullback_through(const DiffOp& L, const RatFun& w, const RatFun& phi) {
    RatFun wp = w.derivative();
    if (wp.is_zero()) throw std::invalid_argument("constant substitution");
    RatFun alpha = RatFun(Poly(1)) / wp;
    int m = L.order();
    // W[k] = ((1/w')(D - phi))^k, as coefficient lists in D
    std::vector<std::vector<RatFun>> W;
    W.push_back({RatFun(Poly(1))});
    for (int k = 0; k < m; ++k) {
        const auto& prev = W.back();
        std::vector<RatFun> next(prev.size() + 1, RatFun(Poly(0)));
        for (size_t i = 0; i < prev.size(); ++i) {
            next[i] += alpha * (prev[i].derivative() - phi * prev[i]);
            next[i + 1] += alpha * prev[i];
        }
        W.push_back(std::move(next));
    }
    std::vector<RatFun> out(m + 1, RatFun(Poly(0)));
    for (int k = 0; k <= m; ++k) {
        RatFun ck = compose(L.c[k], w);
        if (ck.is_zero()) continue;
        for (size_t i = 0; i < W[k].size(); ++i) out[i] += ck * W[k][i];
    }
    return DiffOp::from_ratfun_coeffs(out);
}

DiffOp moebius_transform(const DiffOp& op, const MoebiusMap& m) {
    MoebiusMap mi = m.inverse();
    RatFun w(Poly({mi.b, mi.a}), Poly({mi.d, mi.c}));
    return pullback_through(op, w, RatFun(Poly(0)));
}

// ---------------------------------------------------------------------------
// Riemann schemes

namespace {

Scalar falling(const Scalar& rho, int k) {
    Scalar acc(1);
    for (int i = 0; i < k; ++i) acc *= rho - Scalar(i);
    return acc;
}

// indicial polynomial at 0 for coefficients already recentred there
Poly indicial_at_zero(const std::vector<Poly>& c) {
    int m = static_cast<int>(c.size()) - 1;
    int v = 0;
    while (c[m].coeff(v).is_zero()) ++v;
    // regularity: ord_0(c_k) >= v - (m - k)
    for (int k = 0; k < m; ++k) {
        int need = v - (m - k);
        for (int j = 0; j < need && j <= c[k].degree(); ++j)
            if (!c[k].coeff(j).is_zero())
                throw std::domain_error("irregular singular point");
    }
    // I(rho) = sum_k coeff(c_k, v-(m-k)) * rho(rho-1)...(rho-k+1)
    Poly I;
    for (int k = 0; k <= m; ++k) {
        int idx = v - (m - k);
        if (idx < 0) continue;
        Scalar a = c[k].coeff(idx);
        if (a.is_zero()) continue;
        // falling factorial rho(rho-1)..(rho-k+1) as a polynomial in rho
        Poly ff(1);
        for (int i = 0; i < k; ++i) ff *= Poly({Scalar(-i), Scalar(1)});
        I += a * ff;
    }
    return I;
}

std::vector<Scalar> sorted_exponents(const Poly& indicial) {
    auto roots = small_roots(indicial);
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& l, const Scalar& r) { return Scalar::cmp(l, r) < 0; });
    return roots;
}

} // namespace

RiemannScheme riemann_scheme(const DiffOp& op_in) {
    DiffOp op = op_in.primitive();
    RiemannScheme scheme;
    auto pts = factor_points(op.leading());
    for (const auto& pt : pts) {
        SchemePoint sp;
        if (std::holds_alternative<Scalar>(pt)) {
            const Scalar& e = std::get<Scalar>(pt);
            sp.kind = SchemePoint::Kind::Rational;
            sp.value = e;
            std::vector<Poly> shifted;
            for (const auto& p : op.c) shifted.push_back(p.shifted(e));
            try {
                sp.exponents = sorted_exponents(indicial_at_zero(shifted));
            } catch (const std::domain_error& err) {
                if (std::string(err.what()) == "irregular singular point")
                    throw std::domain_error("irregular singular point at " + e.str());
                throw;
            }
        } else {
            const Poly& f = std::get<Poly>(pt);
            sp.kind = SchemePoint::Kind::ExtPair;
            sp.factor = f;
            Scalar fa = f.coeff(2), fb = f.coeff(1), fc = f.coeff(0);
            Scalar disc = fb * fb - Scalar(4) * fa * fc;
            auto sq = scalar_sqrt(disc);
            if (!sq) throw std::domain_error("factor discriminant outside quadratic extensions");
            Scalar theta = (-fb + *sq) / (Scalar(2) * fa);
            sp.value = theta;
            std::vector<Poly> shifted;
            for (const auto& p : op.c) shifted.push_back(p.shifted(theta));
            try {
                sp.exponents = sorted_exponents(indicial_at_zero(shifted));
            } catch (const std::domain_error& err) {
                if (std::string(err.what()) == "irregular singular point")
                    throw std::domain_error("irregular singular point at root of " + f.str());
                throw;
            }
        }
        scheme.points.push_back(std::move(sp));
    }
    // infinity: x -> 1/x, then look at 0
    DiffOp flipped = pullback_through(op, RatFun(Poly(1), Poly::x()), RatFun(Poly(0)));
    if (flipped.leading().coeff(0).is_zero()) {
        SchemePoint sp;
        sp.kind = SchemePoint::Kind::Infinity;
        try {
            sp.exponents = sorted_exponents(indicial_at_zero(flipped.c));
        } catch (const std::domain_error& err) {
            if (std::string(err.what()) == "irregular singular point")
                throw std::domain_error("irregular singular point at infinity");
            throw;
        }
        scheme.points.push_back(std::move(sp));
    }
    return scheme;
}

std::pair<Scalar, Scalar> fuchs_sum(const DiffOp& op) {
    RiemannScheme scheme = riemann_scheme(op);
    int s = scheme.singular_count();
    int m = op.order();
    Scalar expected = Scalar(s - 2) * Scalar(m * (m - 1)) / Scalar(2);
    return {scheme.exponent_sum(), expected};
}

} // namespace halphen
