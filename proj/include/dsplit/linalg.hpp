#pragma once

#include <cstddef>
#include <utility>
#include <vector>

// Exact Gaussian elimination over any field type F providing +,-,*,/ and
// free functions is_zero(F) and one_like(F) / zero_like(F).
namespace dsplit::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& A) {
    std::vector<std::size_t> pivots;
    if (A.empty()) return pivots;
    const std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(A[p][c])) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        F inv = one_like(A[r][c]) / A[r][c];
        for (std::size_t k = c; k < cols; ++k) A[r][k] = A[r][k] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(A[i][c])) continue;
            F f = A[i][c];
            for (std::size_t k = c; k < cols; ++k) A[i][k] = A[i][k] - f * A[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of {x : A x = 0}; each basis vector has a 1 in one free column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> A, std::size_t cols, const F& one) {
    std::vector<std::vector<F>> basis;
    std::vector<std::size_t> piv = A.empty() ? std::vector<std::size_t>{} : rref(A);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> x(cols, zero_like(one));
        x[f] = one;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = zero_like(one) - A[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace dsplit::linalg
