#pragma once

#include "halphen/scalar.hpp"

#include <utility>
#include <vector>

namespace halphen {

/// Dense univariate polynomial over Q or Q(sqrt(d)), lowest degree first.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const Scalar& c) : c_{c} { trim(); }
    Poly(int v) : c_{Scalar(v)} { trim(); }

    static Poly x();
    static Poly monomial(const Scalar& c, int k);
    /// monic product of (x - r) over the given roots
    static Poly from_roots(const std::vector<Scalar>& roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Scalar(0); }
    const Scalar& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(const Poly& l, const Poly& r);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Scalar& s, const Poly& p);
    friend bool operator==(const Poly& l, const Poly& r) { return l.c_ == r.c_; }

    /// exact division/remainder over the coefficient field
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    friend Poly operator/(const Poly& num, const Poly& den);
    friend Poly operator%(const Poly& num, const Poly& den);

    Poly derivative() const;
    Scalar eval(const Scalar& x0) const;
    /// p(x + t): Taylor shift
    Poly shifted(const Scalar& t) const;
    /// p(s*x)
    Poly scaled_arg(const Scalar& s) const;
    /// x^deg * p(1/x)
    Poly reversed() const;

    Poly monic() const;
    /// positive rational content (gcd of numerators / lcm of denominators over
    /// all rational and root components); zero polynomial has content 0
    Rat content() const;
    Poly primitive() const;

    /// extension tag used by the coefficients (0 if all rational)
    long long ext_d() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Scalar> c_;
    void trim();
};

Poly gcd(const Poly& a, const Poly& b); // monic
Poly lcm(const Poly& a, const Poly& b); // monic

/// Yun squarefree decomposition: p = lc * prod f_i^{m_i}, f_i monic squarefree
/// pairwise coprime, multiplicities distinct and >= 1. Throws on zero input.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p);

/// Rational function num/den, stored with gcd removed and monic denominator.
class RatFun {
public:
    RatFun() : num_(Poly(0)), den_(Poly(1)) {}
    RatFun(Poly num) : num_(std::move(num)), den_(Poly(1)) {}
    RatFun(const Scalar& s) : num_(Poly(s)), den_(Poly(1)) {}
    RatFun(int v) : num_(Poly(v)), den_(Poly(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& l, const RatFun& r);
    friend RatFun operator-(const RatFun& l, const RatFun& r);
    friend RatFun operator*(const RatFun& l, const RatFun& r);
    friend RatFun operator/(const RatFun& l, const RatFun& r);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& l, const RatFun& r) {
        return l.num_ == r.num_ && l.den_ == r.den_;
    }

    RatFun derivative() const;
    Scalar eval(const Scalar& x0) const;
    std::string str(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

/// p(w) for a rational-function argument
RatFun compose(const Poly& p, const RatFun& w);

} // namespace halphen
