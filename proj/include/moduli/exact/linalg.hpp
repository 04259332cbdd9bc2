#pragma once

#include "moduli/errors.hpp"
#include "moduli/exact/matrix.hpp"

#include <utility>
#include <vector>

namespace moduli::exact {

template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination to reduced row echelon form.
template <class T>
RowEchelon<T> rref(Matrix<T> m) {
    RowEchelon<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

// Columns form a basis of {v : m v = 0}; basis vector k has a 1 in the k-th free column.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<T> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
    }
    return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.square()) throw DomainError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    auto e = rref(hstack(m, Matrix<T>::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// Fraction-free (Bareiss) elimination; every division is exact.
template <class T>
T determinant(Matrix<T> m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev = T(1);
    T sign = T(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == T(0)) ++piv;
            if (piv == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Pfaffian by skew congruence elimination:
// Pf [[0, a, u], [-a, 0, v], [-u, -v, C]] = a * Pf(C - (u v^T - v u^T) / a).
template <class T>
T pfaffian(Matrix<T> m) {
    if (!m.is_skew()) throw DomainError("pfaffian requires a skew-symmetric matrix");
    std::size_t n = m.rows();
    if (n % 2 != 0) return T(0);
    T result = T(1);
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && m(k, piv) == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, piv), m(i, k + 1));
            result = -result;
        }
        T a = m(k, k + 1);
        result *= a;
        for (std::size_t i = k + 2; i < n; ++i)
            for (std::size_t j = k + 2; j < n; ++j)
                m(i, j) -= (m(k, i) * m(k + 1, j) - m(k + 1, i) * m(k, j)) / a;
    }
    return result;
}

// Indices of a maximal set of linearly independent rows, chosen greedily in order.
template <class T>
std::vector<std::size_t> independent_rows(const Matrix<T>& m) {
    return rref(m.transpose()).pivots;
}

}  // namespace moduli::exact
