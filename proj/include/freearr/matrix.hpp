#pragma once

// Dense exact matrices over Q. Elimination is deterministic: leftmost
// nonzero pivot column, smallest row index. Reported bases are scaled to
// primitive integer vectors with positive first nonzero entry.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "freearr/rational.hpp"

namespace freearr {

class Matrix {
  public:
    Matrix() : m_rows(0), m_cols(0) {}
    Matrix(size_t rows, size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<RatVec>& rows) {
        size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), nc);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw std::invalid_argument("from_rows: ragged rows");
            for (size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_int_rows(const std::vector<IntVec>& rows) {
        size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), nc);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw std::invalid_argument("from_int_rows: ragged rows");
            for (size_t j = 0; j < nc; ++j) m(i, j) = Rational(rows[i][j]);
        }
        return m;
    }

    size_t rows() const { return m_rows; }
    size_t cols() const { return m_cols; }

    Rational& operator()(size_t i, size_t j) { return m_data[i * m_cols + j]; }
    const Rational& operator()(size_t i, size_t j) const { return m_data[i * m_cols + j]; }

    RatVec row(size_t i) const {
        RatVec r(m_cols);
        for (size_t j = 0; j < m_cols; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void append_row(const RatVec& r) {
        if (m_cols == 0 && m_rows == 0) m_cols = r.size();
        if (r.size() != m_cols) throw std::invalid_argument("append_row: wrong length");
        m_data.insert(m_data.end(), r.begin(), r.end());
        ++m_rows;
    }

    Matrix operator*(const Matrix& o) const {
        if (m_cols != o.m_rows) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix p(m_rows, o.m_cols);
        for (size_t i = 0; i < m_rows; ++i)
            for (size_t k = 0; k < m_cols; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.m_cols; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    RatVec apply(const RatVec& v) const {
        if (v.size() != m_cols) throw std::invalid_argument("matrix apply: shape mismatch");
        RatVec r(m_rows);
        for (size_t i = 0; i < m_rows; ++i)
            for (size_t j = 0; j < m_cols; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    // In-place reduced row echelon form. Returns pivot column indices.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < m_cols && r < m_rows; ++c) {
            size_t p = r;
            while (p < m_rows && (*this)(p, c) == 0) ++p;
            if (p == m_rows) continue;
            if (p != r)
                for (size_t j = 0; j < m_cols; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rational inv = (*this)(r, c);
            for (size_t j = c; j < m_cols; ++j) (*this)(r, j) /= inv;
            for (size_t i = 0; i < m_rows; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                Rational f = (*this)(i, c);
                for (size_t j = c; j < m_cols; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

  private:
    size_t m_rows, m_cols;
    std::vector<Rational> m_data;
};

// Basis of the right null space, one vector per free column in ascending
// column order, each scaled to primitive integer form.
inline std::vector<IntVec> kernel_basis(const Matrix& m) {
    Matrix e = m;
    std::vector<size_t> pivots = e.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, f);
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

// Exact determinant, fraction-free Bareiss elimination.
inline Rational det_exact(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: not square");
    size_t n = m.rows();
    if (n == 0) return Rational(1);
    Matrix a = m;
    Rational prev(1);
    int swaps = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Rational(0);
            for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            ++swaps;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    Rational d = a(n - 1, n - 1);
    return (swaps % 2) ? Rational(-d) : d;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (aug.rref().size() != n) throw std::invalid_argument("inverse: singular matrix");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Parametrization of the common zero set of a stack of linear forms.
struct FlatCoords {
    size_t codim = 0;
    std::vector<IntVec> basis;  // spanning vectors; substitute x = sum_k u_k * basis[k]
};

inline FlatCoords flat_coordinates(const std::vector<IntVec>& forms, size_t dim) {
    Matrix m(forms.size(), dim);
    for (size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].size() != dim) throw std::invalid_argument("flat_coordinates: bad form length");
        for (size_t j = 0; j < dim; ++j) m(i, j) = Rational(forms[i][j]);
    }
    FlatCoords fc;
    fc.basis = kernel_basis(m);
    fc.codim = dim - fc.basis.size();
    return fc;
}

}  // namespace freearr
