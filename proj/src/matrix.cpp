#include "nilform/matrix.hpp"

#include <stdexcept>

namespace nilform {

namespace {

// gcd of the nonzero entries of a row, with early exit at 1.
Poly row_content(const std::vector<Poly>& row) {
    Poly g(row.empty() ? Poly::empty_vars() : row[0].vars_ptr());
    for (const Poly& e : row) {
        if (e.is_zero()) continue;
        g = poly_gcd(g, e);
        if (g.is_constant()) break;
    }
    return g;
}

// Scale a row to integer-primitive coefficients; a row scaling, so the
// rank is unchanged while coefficient growth stays Bareiss-like.
void strip_rational_content(std::vector<Poly>& row, size_t from) {
    Integer g = 0, l = 1;
    for (size_t j = from; j < row.size(); ++j)
        for (const auto& [e, c] : row[j].terms()) {
            g = gcd(g, num(c));
            l = lcm(l, den(c));
        }
    if (g == 0) return;
    Rational scale = Rational(l) / Rational(g);
    if (scale == 1) return;
    for (size_t j = from; j < row.size(); ++j) row[j] *= scale;
}

}  // namespace

BareissResult bareiss_rank(Matrix<Poly> m) {
    // Fraction-free elimination with full (Markowitz) pivoting; every
    // updated row is stripped of its polynomial content, which is a row
    // scaling and leaves the rank unchanged while keeping entries small.
    BareissResult res;
    if (m.empty() || m[0].empty()) return res;
    size_t rows = m.size(), cols = m[0].size();
    VarsPtr vars = m[0][0].vars_ptr();
    size_t k = 0;
    while (k < rows && k < cols) {
        std::vector<size_t> row_nnz(rows, 0), col_nnz(cols, 0);
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (!m[i][j].is_zero()) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
        size_t pi = rows, pj = cols;
        size_t best_fill = ~size_t(0), best_terms = ~size_t(0);
        unsigned best_deg = ~0u;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                const Poly& e = m[i][j];
                if (e.is_zero()) continue;
                size_t fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                size_t t = e.terms().size();
                unsigned d = e.total_degree();
                if (std::tuple(fill, t, d) < std::tuple(best_fill, best_terms, best_deg)) {
                    best_fill = fill;
                    best_terms = t;
                    best_deg = d;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // remaining block is zero
        std::swap(m[k], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
        const Poly pivot = m[k][k];
        res.pivots.push_back(pivot);
        for (size_t i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            for (size_t j = k + 1; j < cols; ++j)
                m[i][j] = m[i][j] * pivot - m[i][k] * m[k][j];
            m[i][k] = Poly(vars);
            Poly g = row_content(m[i]);
            if (!g.is_zero() && !g.is_constant())
                for (size_t j = k + 1; j < cols; ++j)
                    if (!m[i][j].is_zero()) m[i][j] = exact_div(m[i][j], g);
            strip_rational_content(m[i], k + 1);
        }
        ++k;
    }
    res.rank = int(k);
    return res;
}

namespace {

Poly det_rec(const Matrix<Poly>& m, std::vector<size_t>& cols, size_t row) {
    VarsPtr vars = m[0][0].vars_ptr();
    if (cols.size() == 1) return m[row][cols[0]];
    Poly acc(vars);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& e = m[row][cols[k]];
        if (e.is_zero()) continue;
        size_t c = cols[k];
        cols.erase(cols.begin() + long(k));
        Poly sub = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + long(k), c);
        Poly term = e * sub;
        if (k % 2) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

Poly poly_det(const Matrix<Poly>& m) {
    if (m.empty()) return Poly::constant(1);
    if (m.size() != m[0].size()) throw std::invalid_argument("poly_det: matrix not square");
    std::vector<size_t> cols(m.size());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_rec(m, cols, 0);
}

}  // namespace nilform
