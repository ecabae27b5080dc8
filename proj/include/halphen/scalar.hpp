#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace halphen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct field_mismatch : std::runtime_error {
    field_mismatch() : std::runtime_error("cannot mix two different quadratic extensions") {}
};

/// Element of Q or of a quadratic extension Q(sqrt(d)), stored as a + b*sqrt(d)
/// with d a squarefree integer (d = 0 marks a plain rational, b = 0 then).
/// Values with b = 0 compare equal to the corresponding rational regardless of d.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(int v) : a_(v), b_(0), d_(0) {}
    Scalar(long long v) : a_(Int(v)), b_(0), d_(0) {}
    Scalar(const Int& v) : a_(v), b_(0), d_(0) {}
    Scalar(const Rat& v) : a_(v), b_(0), d_(0) {}
    Scalar(const Rat& a, const Rat& b, long long d);

    static Scalar rational(const Int& num, const Int& den);
    /// sqrt(d) for squarefree d (not 0 or 1)
    static Scalar root_of(long long d);

    const Rat& rational_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    long long ext_d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /// rational value; throws if the element is irrational
    const Rat& to_rational() const;

    Scalar conj() const { return Scalar(a_, -b_, d_); }
    /// a^2 - b^2 d, always rational
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        if (l.b_ == 0 && r.b_ == 0) return l.a_ == r.a_;
        return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    Scalar inverse() const;

    /// deterministic order for sorting/dedup (lexicographic, not numeric for exts)
    static int cmp(const Scalar& l, const Scalar& r);

    std::string str() const;

private:
    Rat a_, b_;
    long long d_;
    void reduce() { if (b_ == 0) d_ = 0; }
    static long long merge_d(long long x, long long y);
};

/// squarefree part of a nonzero integer (keeps sign)
long long squarefree_part(const Int& n);

/// exact square root of a rational if it is a perfect square
std::optional<Rat> rat_sqrt(const Rat& v);

/// exact square root within Q or a quadratic extension.
/// For a rational input that is not a perfect square the result lives in
/// Q(sqrt(d)) with d its squarefree part; for an ext input the root is searched
/// in the same extension only.
std::optional<Scalar> scalar_sqrt(const Scalar& v);

std::string rat_str(const Rat& v);

} // namespace halphen
