#include "halphen/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace halphen {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;

Mat::Mat(std::initializer_list<std::initializer_list<int>> v) {
    rows_ = static_cast<int>(v.size());
    cols_ = rows_ ? static_cast<int>(v.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& row : v) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged rows");
        for (int x : row) e_.emplace_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat operator*(const Mat& l, const Mat& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("shape mismatch");
    Mat out(l.rows_, r.cols_);
    for (int i = 0; i < l.rows_; ++i)
        for (int k = 0; k < l.cols_; ++k) {
            const Scalar& lik = l.at(i, k);
            if (lik.is_zero()) continue;
            for (int j = 0; j < r.cols_; ++j) {
                if (r.at(k, j).is_zero()) continue;
                out.at(i, j) += lik * r.at(k, j);
            }
        }
    return out;
}

Mat operator+(const Mat& l, const Mat& r) {
    if (l.rows_ != r.rows_ || l.cols_ != r.cols_) throw std::invalid_argument("shape mismatch");
    Mat out = l;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += r.e_[i];
    return out;
}

Mat operator-(const Mat& l, const Mat& r) {
    if (l.rows_ != r.rows_ || l.cols_ != r.cols_) throw std::invalid_argument("shape mismatch");
    Mat out = l;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= r.e_[i];
    return out;
}

Mat operator*(const Scalar& s, const Mat& m) {
    Mat out = m;
    for (auto& v : out.e_) v *= s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::conj_transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

Scalar Mat::trace() const {
    Scalar t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Scalar(int(i == j))) return false;
    return true;
}

namespace {

// clear each row to "integral" scalars so the Bareiss divisions stay small
void clear_row_denominators(Mat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            l = lcm(l, denominator(s.rational_part()));
            l = lcm(l, denominator(s.root_part()));
        }
        if (l != 1) {
            Scalar f{Rat(l)};
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= f;
        }
    }
}

// fraction-free forward elimination; returns pivot columns, leaves m in
// row-echelon form (entries exact; divisions by the previous pivot are exact
// on cleared input)
std::vector<int> bareiss_echelon(Mat& m) {
    clear_row_denominators(m);
    std::vector<int> pivots;
    Scalar prev(1);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        const Scalar pivot = m.at(r, c);
        for (int i = r + 1; i < m.rows(); ++i) {
            const Scalar f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * pivot - f * m.at(r, j)) / prev;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(bareiss_echelon(m).size());
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return Scalar(1);
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    // track the scaling introduced by denominator clearing and row swaps
    Mat m = *this;
    Scalar scale(1);
    for (int i = 0; i < rows_; ++i) {
        Int l = 1;
        for (int j = 0; j < cols_; ++j) {
            l = lcm(l, denominator(m.at(i, j).rational_part()));
            l = lcm(l, denominator(m.at(i, j).root_part()));
        }
        if (l != 1) {
            Scalar f{Rat(l)};
            for (int j = 0; j < cols_; ++j) m.at(i, j) *= f;
            scale *= f;
        }
    }
    Scalar prev(1);
    int sign = 1;
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Scalar(0);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            sign = -sign;
        }
        const Scalar pivot = m.at(c, c);
        for (int i = c + 1; i < rows_; ++i) {
            const Scalar f = m.at(i, c);
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - f * m.at(c, j)) / prev;
        }
        prev = pivot;
    }
    Scalar d = m.at(rows_ - 1, cols_ - 1);
    if (sign < 0) d = -d;
    return d / scale;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    // plain field Gauss-Jordan (the augmented system needs full reduction anyway)
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (!aug.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) throw std::domain_error("singular matrix");
        if (p != r)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(r, j));
        Scalar inv = aug.at(r, c).inverse();
        for (int j = 0; j < 2 * n; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c).is_zero()) continue;
            Scalar f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& m) {
    Mat e = m;
    std::vector<int> pivots = bareiss_echelon(e);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[fc] = Scalar(1);
        // back-substitute through the echelon rows
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            int pc = pivots[r];
            if (pc > fc) continue;
            Scalar acc(0);
            for (int j = pc + 1; j < n; ++j)
                if (!v[j].is_zero() && !e.at(r, j).is_zero()) acc += e.at(r, j) * v[j];
            v[pc] = -acc / e.at(r, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("shape mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = bareiss_echelon(aug);
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        int pc = pivots[r];
        Scalar acc = aug.at(r, m.cols());
        for (int j = pc + 1; j < m.cols(); ++j)
            if (!x[j].is_zero()) acc -= aug.at(r, j) * x[j];
        x[pc] = acc / aug.at(r, pc);
    }
    return x;
}

} // namespace halphen
