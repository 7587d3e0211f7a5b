#pragma once

#include <functional>
#include <vector>

#include "nilform/ratfunc.hpp"
#include "nilform/scalar.hpp"

namespace nilform {

// Dense matrix over an arbitrary scalar type.
template <typename T>
using Matrix = std::vector<std::vector<T>>;

struct BareissResult {
    int rank = 0;
    std::vector<Poly> pivots;  // the chosen pivot polynomials, in order
};

// Exact rank of a polynomial matrix by fraction-free Bareiss elimination
// with full pivoting (pivot chosen minimal by term count, then degree).
BareissResult bareiss_rank(Matrix<Poly> m);

// Row-reduction utilities over a field type F supporting +,-,*,/ and
// is_zero(). Deterministic: pivots are the first nonzero entry per column.
template <typename F>
struct Rref {
    Matrix<F> mat;
    std::vector<int> pivot_cols;
    int rank() const { return int(pivot_cols.size()); }
};

template <typename F>
Rref<F> row_reduce(Matrix<F> m) {
    Rref<F> r;
    if (m.empty()) return r;
    size_t rows = m.size(), cols = m[0].size();
    size_t lead = 0;
    for (size_t c = 0; c < cols && lead < rows; ++c) {
        size_t p = lead;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[lead], m[p]);
        F inv = m[lead][c];
        for (size_t j = c; j < cols; ++j) m[lead][j] = m[lead][j] / inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == lead || m[i][c].is_zero()) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[lead][j];
        }
        r.pivot_cols.push_back(int(c));
        ++lead;
    }
    r.mat = std::move(m);
    return r;
}

template <typename F>
int field_rank(const Matrix<F>& m) {
    return row_reduce(m).rank();
}

// Basis of the right kernel, from the reduced row echelon form: one
// vector per free column, deterministic.
template <typename F>
Matrix<F> kernel_basis(const Matrix<F>& m, const F& zero, const F& one) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    Rref<F> r = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivot_cols) is_pivot[size_t(c)] = true;
    Matrix<F> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, zero);
        v[free] = one;
        for (size_t k = 0; k < r.pivot_cols.size(); ++k) {
            size_t pc = size_t(r.pivot_cols[k]);
            if (pc < free) v[pc] = zero - r.mat[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of a square matrix over a field; throws if singular.
template <typename F>
Matrix<F> field_inverse(Matrix<F> m, const F& zero, const F& one) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, zero);
        m[i][n + i] = one;
    }
    Rref<F> r = row_reduce(std::move(m));
    if (r.rank() < int(n) || r.pivot_cols[n - 1] != int(n - 1))
        throw std::domain_error("field_inverse: singular matrix");
    Matrix<F> inv(n, std::vector<F>(n, zero));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = r.mat[i][n + j];
    return inv;
}

// Determinant of a polynomial matrix by cofactor expansion with zero
// pruning (fine for the small patterned matrices this library meets).
Poly poly_det(const Matrix<Poly>& m);

}  // namespace nilform
