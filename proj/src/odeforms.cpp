#include "halphen/odeforms.hpp"

#include <algorithm>

namespace halphen {

namespace {

Poly require_monic_squarefree_cubic(Poly p0, const char* what) {
    if (p0.degree() != 3) throw std::invalid_argument(std::string(what) + ": cubic required");
    p0 = p0.monic();
    if (gcd(p0, p0.derivative()).degree() > 0)
        throw std::invalid_argument(std::string(what) + ": repeated singular points");
    return p0;
}

} // namespace

LameEquation::LameEquation(Poly p0_, Scalar nu_, Scalar H_)
    : p0(require_monic_squarefree_cubic(std::move(p0_), "Lame")), nu(std::move(nu_)), H(std::move(H_)) {}

DiffOp LameEquation::as_operator() const {
    Poly p = Scalar(4) * p0;
    Poly q({H, -nu}); // -(nu x - H)
    return DiffOp({q, Scalar(Rat(1, 2)) * p.derivative(), p});
}

LameEquation LameEquation::from_operator(const DiffOp& op) {
    if (op.order() != 2) throw std::invalid_argument("not a Lame operator: order != 2");
    const Poly& c2 = op.c[2];
    if (c2.degree() != 3) throw std::invalid_argument("not a Lame operator: leading degree != 3");
    Scalar s = c2.leading();
    if (!(op.c[1] - Scalar(Rat(1, 2)) * c2.derivative()).is_zero())
        throw std::invalid_argument("not a Lame operator: first-order term != p'/2");
    if (op.c[0].degree() > 1)
        throw std::invalid_argument("not a Lame operator: zeroth term degree > 1");
    Scalar quarter_s = s / Scalar(4);
    return LameEquation(c2.monic(), -op.c[0].coeff(1) / quarter_s, op.c[0].coeff(0) / quarter_s);
}

HeunEquation::HeunEquation(Poly p0_, Scalar ab_, Scalar Ht_, Scalar lambda_)
    : p0(require_monic_squarefree_cubic(std::move(p0_), "Heun")),
      ab(std::move(ab_)), Ht(std::move(Ht_)), lambda(std::move(lambda_)) {}

DiffOp HeunEquation::as_operator() const {
    return DiffOp({Poly({Ht, ab}), lambda * p0.derivative(), p0});
}

HeunEquation HeunEquation::from_operator(const DiffOp& op) {
    if (op.order() != 2) throw std::invalid_argument("not a Heun operator: order != 2");
    const Poly& c2 = op.c[2];
    if (c2.degree() != 3) throw std::invalid_argument("not a Heun operator: leading degree != 3");
    Scalar s = c2.leading();
    Poly p0 = c2.monic();
    Poly dp0 = p0.derivative();
    // c1 = s * lambda * p0'
    if (op.c[1].degree() > 2) throw std::invalid_argument("not a Heun operator: first-order degree > 2");
    Scalar lambda(0);
    if (!op.c[1].is_zero()) {
        lambda = op.c[1].leading() / (s * dp0.leading());
        if (!(op.c[1] - (s * lambda) * dp0).is_zero())
            throw std::invalid_argument("not a Heun operator: first-order term not proportional to p'");
    }
    if (op.c[0].degree() > 1)
        throw std::invalid_argument("not a Heun operator: zeroth term degree > 1");
    return HeunEquation(p0, op.c[0].coeff(1) / s, op.c[0].coeff(0) / s, lambda);
}

EssentialPoints essential_points(const DiffOp& op) {
    RiemannScheme scheme = riemann_scheme(op);
    EssentialPoints out;
    for (const auto& sp : scheme.points) {
        bool apparent = false;
        if (sp.exponents.size() == 2) {
            Scalar diff = sp.exponents[1] - sp.exponents[0];
            if (!diff.is_zero() && diff.is_rational() &&
                denominator(diff.to_rational()) == 1)
                apparent = true; // nonzero integer difference, monodromy test skipped
        }
        if (apparent) continue;
        if (sp.is_infinity()) out.has_infinity = true;
        else if (sp.kind == SchemePoint::Kind::ExtPair) {
            out.finite.push_back(sp.value);
            out.finite.push_back(sp.value.conj());
        } else {
            out.finite.push_back(sp.value);
        }
    }
    return out;
}

namespace {

struct ProjPoint {
    bool inf = false;
    Scalar v;
};

// Moebius map sending (p0, p1, pinf) to (0, 1, oo)
MoebiusMap map_to_standard(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& pinf) {
    // m(w) = (w - p0)(p1 - pinf) / ((w - pinf)(p1 - p0)), with limits when one
    // anchor is infinite
    if (p0.inf)  // m(w) = (p1 - pinf)/(w - pinf)
        return MoebiusMap(Scalar(0), p1.v - pinf.v, Scalar(1), -pinf.v);
    if (p1.inf)  // m(w) = (w - p0)/(w - pinf)
        return MoebiusMap(Scalar(1), -p0.v, Scalar(1), -pinf.v);
    if (pinf.inf) // m(w) = (w - p0)/(p1 - p0)
        return MoebiusMap(Scalar(1), -p0.v, Scalar(0), p1.v - p0.v);
    return MoebiusMap(p1.v - pinf.v, -p0.v * (p1.v - pinf.v),
                      p1.v - p0.v, -pinf.v * (p1.v - p0.v));
}

std::optional<Scalar> apply_proj(const MoebiusMap& m, const ProjPoint& p) {
    return p.inf ? m.apply_infinity() : m.apply(p.v);
}

} // namespace

std::vector<std::pair<Scalar, DiffOp>> normalize_heun(const DiffOp& op) {
    if (op.order() != 2) throw std::invalid_argument("normalize_heun: order 2 required");
    EssentialPoints ep = essential_points(op);
    if (ep.count() != 4)
        throw std::domain_error("normalize_heun: " + std::to_string(ep.count()) +
                                " essential singular points, need 4");
    std::vector<ProjPoint> pts;
    for (const auto& v : ep.finite) pts.push_back({false, v});
    if (ep.has_infinity) pts.push_back({true, Scalar(0)});

    std::vector<std::pair<Scalar, DiffOp>> out;
    int idx[4] = {0, 1, 2, 3};
    std::sort(idx, idx + 4);
    do {
        const ProjPoint &P0 = pts[idx[0]], &P1 = pts[idx[1]], &Pinf = pts[idx[2]], &P4 = pts[idx[3]];
        MoebiusMap m = [&]() -> MoebiusMap {
            try {
                return map_to_standard(P0, P1, Pinf);
            } catch (const field_mismatch&) {
                throw std::domain_error("normalize_heun: anchor points span two different extensions");
            }
        }();
        auto t = apply_proj(m, P4);
        if (!t || t->is_zero() || *t == Scalar(1)) continue; // degenerate assignment
        bool seen = false;
        for (const auto& [tv, o] : out)
            if (tv == *t) { seen = true; break; }
        if (seen) continue;
        out.emplace_back(*t, moebius_transform(op, m));
    } while (std::next_permutation(idx, idx + 4));
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return Scalar::cmp(l.first, r.first) < 0;
    });
    return out;
}

} // namespace halphen
