#pragma once

// Dense exact linear algebra over a field (Rat or RatFunc): reduced row
// echelon form, rank, nullspace, and linear solving. Sizes here are small
// (complexes are enumerated within weight/degree windows), so plain Gaussian
// elimination is enough.

#include <optional>
#include <vector>

#include "curva/rational.hpp"

namespace curva {

template <class K>
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, FieldOps<K>::zero()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

// In-place reduced row echelon form. Returns the rank; pivot columns are
// appended to *pivots when given.
template <class K>
size_t rref(Mat<K>& m, std::vector<size_t>* pivots = nullptr) {
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        size_t sel = r;
        while (sel < m.rows() && FieldOps<K>::is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        K piv_inv = FieldOps<K>::inv(m.at(r, col));
        for (size_t j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * piv_inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || FieldOps<K>::is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return r;
}

template <class K>
size_t rank(Mat<K> m) {
    return rref(m);
}

// Basis of the right nullspace {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m) {
    std::vector<size_t> pivots;
    rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(m.cols(), FieldOps<K>::zero());
        v[free_col] = FieldOps<K>::one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& A, const std::vector<K>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat<K> aug(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<size_t> pivots;
    rref(aug, &pivots);
    for (size_t p : pivots)
        if (p == A.cols()) return std::nullopt;  // pivot in the constant column
    std::vector<K> x(A.cols(), FieldOps<K>::zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols());
    return x;
}

}  // namespace curva
