#pragma once

#include "halphen/scalar.hpp"

#include <vector>

namespace halphen {

/// Dense matrix over Q or Q(sqrt(d)); all arithmetic is exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Scalar(0)) {}
    Mat(std::initializer_list<std::initializer_list<int>> v);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    friend Mat operator*(const Mat& l, const Mat& r);
    friend Mat operator+(const Mat& l, const Mat& r);
    friend Mat operator-(const Mat& l, const Mat& r);
    friend Mat operator*(const Scalar& s, const Mat& m);
    friend bool operator==(const Mat& l, const Mat& r) {
        return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.e_ == r.e_;
    }

    Mat transpose() const;
    Mat conj_transpose() const;
    Scalar trace() const;
    Scalar det() const;
    Mat inverse() const;
    int rank() const;
    bool is_identity() const;

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

/// Exact kernel basis. Fraction-free (Bareiss) forward elimination on the
/// denominator-cleared matrix, field back-substitution for the basis.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

/// Solve M x = b; empty optional if inconsistent. Returns one solution.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

} // namespace halphen
