#pragma once

#include "halphen/diffop.hpp"

namespace halphen {

/// Lame equation p y'' + 1/2 p' y' - (nu x - H) y = 0 with p = 4 p0,
/// p0 monic squarefree cubic, nu = n(n+1).
struct LameEquation {
    Poly p0;
    Scalar nu, H;

    LameEquation(Poly p0_, Scalar nu_, Scalar H_);

    Scalar sum_e() const { return -p0.coeff(2); }
    DiffOp as_operator() const;
    static LameEquation from_operator(const DiffOp& op);

    friend bool operator==(const LameEquation& l, const LameEquation& r) {
        return l.p0 == r.p0 && l.nu == r.nu && l.H == r.H;
    }
};

/// Heun-type equation p0 y'' + lambda p0' y' + (ab x + Ht) y = 0 with p0 monic
/// squarefree cubic; lambda = 1 for the plain table rows.
struct HeunEquation {
    Poly p0;
    Scalar ab, Ht;
    Scalar lambda{1};

    HeunEquation(Poly p0_, Scalar ab_, Scalar Ht_, Scalar lambda_ = Scalar(1));

    Scalar sum_e() const { return -p0.coeff(2); }
    DiffOp as_operator() const;
    static HeunEquation from_operator(const DiffOp& op);

    friend bool operator==(const HeunEquation& l, const HeunEquation& r) {
        return l.p0 == r.p0 && l.ab == r.ab && l.Ht == r.Ht && l.lambda == r.lambda;
    }
};

/// All Moebius normalizations of a 2nd-order operator with exactly 4 essential
/// singular points onto {0, 1, t, oo}; the t values run over the cross-ratio
/// orbit (up to 6, fewer on degeneracy). Points whose exponent difference is a
/// nonzero integer count as apparent candidates and are ignored.
std::vector<std::pair<Scalar, DiffOp>> normalize_heun(const DiffOp& op);

/// Essential singular points of an order-2 operator (finite ones as Scalars,
/// infinity flagged separately); apparent candidates dropped.
struct EssentialPoints {
    std::vector<Scalar> finite;
    bool has_infinity = false;
    int count() const { return static_cast<int>(finite.size()) + (has_infinity ? 1 : 0); }
};
EssentialPoints essential_points(const DiffOp& op);

} // namespace halphen
