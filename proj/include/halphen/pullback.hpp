#pragma once

#include "halphen/odeforms.hpp"
#include "halphen/report.hpp"

namespace halphen {

/// Rational map j = j1/j2 with coprime polynomial parts.
struct BelyiMap {
    Poly j1, j2;

    BelyiMap(Poly j1_, Poly j2_);
    int degree() const { return std::max(j1.degree(), j2.degree()); }
    RatFun as_ratfun() const { return RatFun(j1, j2); }
    /// map with psi substituted for x (coprime-normalized)
    BelyiMap precomposed_affine(const Scalar& scale, const Scalar& shift) const;
};

/// Fiber multiplicity partitions over 0, 1, oo; each sums to the degree, with
/// x = oo contributing the degree deficit of the relevant polynomial.
struct RamificationData {
    std::vector<int> over0, over1, overInf; // sorted descending

    friend bool operator==(const RamificationData& l, const RamificationData& r) {
        return l.over0 == r.over0 && l.over1 == r.over1 && l.overInf == r.overInf;
    }
    std::string str() const;
};

struct HGParams {
    Scalar a, b, c;
    HGParams(Scalar a_, Scalar b_, Scalar c_);
};

RamificationData ramification_data(const BelyiMap& j);

/// Riemann-Hurwitz equality over the three fibers <=> no critical values
/// outside {0, 1, oo}.
bool is_belyi(const BelyiMap& j);

/// Hypergeometric operator z(1-z) u'' + (c - (a+b+1) z) u' - ab u.
DiffOp hypergeometric_operator(const HGParams& h);

/// Minimal operator annihilating j2^{-a} * u(j(x)) for u in the hypergeometric
/// solution space (the gauge exponent is the first parameter, as displayed).
DiffOp pullback_operator(const HGParams& h, const BelyiMap& j);

struct BelyiRow {
    std::string id;
    BelyiMap printed;            // map as printed (ramification/Belyi checks)
    Scalar corr_scale, corr_shift; // pullback uses printed o (scale*x + shift)
    HGParams params;             // gauge parameter first
    RamificationData ram;
    HeunEquation heun;           // expected pullback output
    std::optional<Scalar> paper_Ht; // set when the paper's printed value differs
    std::optional<LameEquation> lame; // the derived Lame row, when printed
    std::optional<Scalar> paper_lame_H;
};

Report verify_pullback_row(const BelyiRow& row);

/// Example-row verification: the pullback has 4 essential singular points
/// whose cross-ratio orbit contains t, local exponents as given, and the
/// displayed Heun inverts through inverse_halphen_c to the displayed Lame data.
struct ExampleRow {
    BelyiMap map;
    HGParams params;
    Scalar t;                  // expected cross-ratio class representative
    HeunEquation heun;         // displayed Heun (lambda != 1)
    Scalar n, nu, H;           // expected inverse-Halphen data
};

Report verify_example_row(const ExampleRow& row);

} // namespace halphen
