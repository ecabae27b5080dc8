#pragma once

#include "halphen/odeforms.hpp"
#include "halphen/report.hpp"

namespace halphen {

/// Third-order operator annihilating all products of pairs of solutions of a
/// second-order operator.
DiffOp sym_square_2nd(const DiffOp& op);

/// Operator satisfied by the Euler integral of a symmetric-square solution:
/// p y''' + (3/2+mu) p' y'' + r1 y' + r0 y with
/// r1 = 12(mu+1)^2 x - 4(mu+1)^2 sum_e - 4 nu x + 4 H,
/// r0 = 2(2mu+1)(mu^2 + mu - nu).
DiffOp euler_third_order(const LameEquation& eq, const Scalar& mu);

Scalar euler_r0(const Scalar& mu, const Scalar& nu);
Poly euler_r1(const LameEquation& eq, const Scalar& mu);

/// Order-reduced specialization at mu = -1/2:
/// p y'' + p' y' + (4H - sum_e - (2n+3)(2n-1) x) y, p = 4 p0.
DiffOp halphen_a(const LameEquation& eq);

enum class HalphenCase { b, c };

/// Order-reduced specializations at mu = n (case b) and mu = -n-1 (case c,
/// the Halphen transform). Requires n(n+1) = nu.
DiffOp halphen_bc(const LameEquation& eq, const Scalar& n, HalphenCase cs);

/// Inverse of halphen_a on lambda = 1 Heun data:
/// nu = 3/4 - ab, H = Ht + sum_e/4, p = 4 p0.
LameEquation heun_to_lame(const HeunEquation& h);

/// lambda = 1/2 - n determines n; inverts halphen_bc(.., n, c).
LameEquation inverse_halphen_c(const HeunEquation& h);

struct TableRow {
    int nr;
    HeunEquation heun;
    LameEquation lame;
};

/// Row-by-row check that heun_to_lame maps each Heun table row onto the Lame
/// table row and that halphen_a inverts it up to content.
Report reproduce_tables(const std::vector<TableRow>& rows);

} // namespace halphen
