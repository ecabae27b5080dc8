#pragma once

#include "halphen/poly.hpp"

#include <variant>
#include <vector>

namespace halphen {

/// Linear differential operator sum_k c_k(x) y^(k) = 0 with exact polynomial
/// coefficients. The constructor keeps the given scaling (the tables display
/// operators in a fixed frame); primitive() is the canonical content-free
/// form. Equality of operators is up to a nonzero scalar multiple.
struct DiffOp {
    std::vector<Poly> c; // c[k] multiplies y^(k)

    DiffOp() = default;
    explicit DiffOp(std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Poly& leading() const { return c.back(); }

    /// common polynomial factor and scalar content removed, sign normalized
    DiffOp primitive() const;

    /// monic rational-function coefficients -> minimal primitive operator
    static DiffOp from_ratfun_coeffs(const std::vector<RatFun>& coeffs);

    bool equal_up_to_scalar(const DiffOp& o) const;
    std::string str() const;
};

/// x -> (a x + b) / (c x + d), ad - bc != 0
struct MoebiusMap {
    Scalar a, b, c, d;
    MoebiusMap(Scalar a_, Scalar b_, Scalar c_, Scalar d_);
    static MoebiusMap identity() { return MoebiusMap(Scalar(1), Scalar(0), Scalar(0), Scalar(1)); }

    MoebiusMap inverse() const;
    MoebiusMap compose(const MoebiusMap& inner) const; // this after inner
    /// image of a finite point; nullopt when it maps to infinity
    std::optional<Scalar> apply(const Scalar& x) const;
    std::optional<Scalar> apply_infinity() const;
};

struct SchemePoint {
    enum class Kind { Rational, ExtPair, Infinity };
    Kind kind = Kind::Rational;
    Scalar value;            // the point (one root of factor for ExtPair)
    Poly factor;             // irreducible quadratic designation for ExtPair
    std::vector<Scalar> exponents;

    bool is_infinity() const { return kind == Kind::Infinity; }
    /// number of geometric points this entry stands for (2 for a conjugate pair)
    int multiplicity() const { return kind == Kind::ExtPair ? 2 : 1; }
};

struct RiemannScheme {
    std::vector<SchemePoint> points;

    int singular_count() const;
    Scalar exponent_sum() const; // conjugate pairs counted twice
    std::string str() const;
};

/// Local exponents at every singular point (finite ones from the leading
/// coefficient, infinity included when singular). Throws on an irregular
/// singular point or when exponents do not fit Q or a quadratic extension.
RiemannScheme riemann_scheme(const DiffOp& op);

/// Fuchs relation value pair: (sum of all exponents, expected (s-2)m(m-1)/2).
std::pair<Scalar, Scalar> fuchs_sum(const DiffOp& op);

/// Operator whose solutions are y o m^{-1} for solutions y of op.
DiffOp moebius_transform(const DiffOp& op, const MoebiusMap& m);

/// Core substitution machinery: operator annihilating g(x) u(w(x)) for u in
/// ker(L), where phi = g'/g is rational. Pass phi = 0 for a plain change of
/// variable.
DiffOp pullback_through(const DiffOp& L, const RatFun& w, const RatFun& phi);

/// Rational points and irreducible quadratic factors of p (linear factors as
/// Scalars). Throws when a factor of degree >= 3 cannot be split.
std::vector<std::variant<Scalar, Poly>> factor_points(const Poly& p);

/// Roots of a polynomial of degree <= 2 over Q or one quadratic extension;
/// degree 3 is handled when a rational root exists.
std::vector<Scalar> small_roots(const Poly& p);

} // namespace halphen
