#ifndef ENNIL_LINALG_HPP
#define ENNIL_LINALG_HPP

#include "common.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ennil {

// Dense matrix over an exact field (Rat or bound Fp).
template <class C> struct Matrix {
    int rows = 0, cols = 0;
    std::vector<C> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, C(0)) {}

    C &at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const C &at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class C> Matrix<C> mat_mul(const Matrix<C> &A, const Matrix<C> &B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape");
    Matrix<C> R(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (is_zero(A.at(i, k))) continue;
            for (int j = 0; j < B.cols; ++j)
                R.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return R;
}

// Row-reduce in place; returns pivot columns.
template <class C> std::vector<int> rref(Matrix<C> &M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (!is_zero(M.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        C inv = coeff_inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) *= inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || is_zero(M.at(i, c))) continue;
            C f = M.at(i, c);
            for (int j = c; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class C> int rank(Matrix<C> M) { return static_cast<int>(rref(M).size()); }

// Solve A x = b; nullopt if inconsistent. Any solution returned
// (free variables set to zero).
template <class C>
std::optional<std::vector<C>> solve(const Matrix<C> &A, const std::vector<C> &b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: shape");
    Matrix<C> M(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    auto pivots = rref(M);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<C> x(A.cols, C(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M.at(static_cast<int>(k), A.cols);
    return x;
}

// Basis of the kernel of A.
template <class C> std::vector<std::vector<C>> kernel(Matrix<C> M) {
    auto pivots = rref(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<C>> basis;
    for (int c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<C> v(M.cols, C(0));
        v[c] = C(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -M.at(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ennil

#endif
