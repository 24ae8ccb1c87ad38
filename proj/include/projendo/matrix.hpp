#pragma once

#include "projendo/error.hpp"
#include "projendo/number_field.hpp"
#include "projendo/poly.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace projendo {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using FieldMatrix = Matrix<FieldElement>;
using FieldVector = Vector<FieldElement>;
using Index = Eigen::Index;

template <class S>
struct Echelon {
    Matrix<S> reduced;          // reduced row echelon form
    std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class S>
Echelon<S> exact_rref(Matrix<S> m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const S inv = inverse(m(row, col));
        for (Index j = col; j < m.cols(); ++j)
            if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            const S f = m(i, col);
            for (Index j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class S>
Index exact_rank(const Matrix<S>& m) {
    // forward elimination only
    Matrix<S> a = m;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index p = row;
        while (p < a.rows() && is_zero(a(p, col))) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.row(p).swap(a.row(row));
        const S inv = inverse(a(row, col));
        for (Index i = row + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, col))) continue;
            const S f = a(i, col) * inv;
            for (Index j = col; j < a.cols(); ++j)
                if (!is_zero(a(row, j))) a(i, j) = a(i, j) - f * a(row, j);
        }
        ++row;
    }
    return row;
}

template <class S>
S exact_determinant(Matrix<S> a) {
    require(a.rows() == a.cols(), "dimension-mismatch", "determinant of a non-square matrix");
    S det(1);
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col) {
        Index p = col;
        while (p < n && is_zero(a(p, col))) ++p;
        if (p == n) return S(0);
        if (p != col) {
            a.row(p).swap(a.row(col));
            det = -det;
        }
        det = det * a(col, col);
        const S inv = inverse(a(col, col));
        for (Index i = col + 1; i < n; ++i) {
            if (is_zero(a(i, col))) continue;
            const S f = a(i, col) * inv;
            for (Index j = col; j < n; ++j)
                if (!is_zero(a(col, j))) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

/// Inverse, or Error("singular-matrix").
template <class S>
Matrix<S> exact_inverse(const Matrix<S>& m) {
    require(m.rows() == m.cols(), "dimension-mismatch", "inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<S> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Matrix<S>::Identity(n, n);
    auto e = exact_rref(std::move(aug));
    require(static_cast<Index>(e.pivots.size()) == n && (n == 0 || e.pivots.back() == n - 1), "singular-matrix",
            "matrix is not invertible");
    return e.reduced.rightCols(n);
}

/// Basis of the right kernel, one vector per column, in the canonical
/// free-variable order of the RREF.
template <class S>
Matrix<S> exact_nullspace(const Matrix<S>& m) {
    auto e = exact_rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free;
    for (Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Matrix<S> basis = Matrix<S>::Zero(m.cols(), static_cast<Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Index f = free[k];
        basis(f, static_cast<Index>(k)) = S(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(r), f);
    }
    return basis;
}

/// det(t I - A) by reduction to upper Hessenberg form followed by the
/// standard three-term recurrence; O(n^3) field operations.
template <class S>
Poly<S> characteristic_polynomial(const Matrix<S>& m) {
    require(m.rows() == m.cols(), "dimension-mismatch", "characteristic polynomial of a non-square matrix");
    Matrix<S> h = m;
    const Index n = h.rows();
    for (Index c = 0; c + 2 < n; ++c) {
        Index p = c + 1;
        while (p < n && is_zero(h(p, c))) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            h.row(p).swap(h.row(c + 1));
            h.col(p).swap(h.col(c + 1));
        }
        const S inv = inverse(h(c + 1, c));
        for (Index j = c + 2; j < n; ++j) {
            if (is_zero(h(j, c))) continue;
            const S u = h(j, c) * inv;
            for (Index k = 0; k < n; ++k) h(j, k) = h(j, k) - u * h(c + 1, k);
            for (Index k = 0; k < n; ++k) h(k, c + 1) = h(k, c + 1) + u * h(k, j);
        }
    }
    const Poly<S> t = Poly<S>::monomial(S(1), 1);
    std::vector<Poly<S>> p(static_cast<std::size_t>(n) + 1);
    p[0] = Poly<S>::constant(S(1));
    for (Index k = 1; k <= n; ++k) {
        Poly<S> next = (t - Poly<S>::constant(h(k - 1, k - 1))) * p[static_cast<std::size_t>(k - 1)];
        S sub(1);
        for (Index i = k - 1; i >= 1; --i) {
            sub = sub * h(i, i - 1);
            const S coeff = h(i - 1, k - 1) * sub;
            if (!is_zero(coeff)) next -= coeff * p[static_cast<std::size_t>(i - 1)];
        }
        p[static_cast<std::size_t>(k)] = std::move(next);
    }
    return p.back();
}

/// Division-free determinant (Berkowitz) over a commutative ring `R` that
/// only offers +, -, * and construction from int.
template <class R>
R berkowitz_determinant(const std::vector<std::vector<R>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return R(1);
    // c: coefficients of det(t I - A_k), high to low, for the leading k x k block A_k
    std::vector<R> c{R(1), R(0) - a[0][0]};
    for (std::size_t k = 1; k < n; ++k) {
        // A_{k+1} = [[A_k, C], [row, a_kk]]
        std::vector<R> q(k + 2, R(0));
        q[0] = R(1);
        q[1] = R(0) - a[k][k];
        std::vector<R> v(k, R(0));
        for (std::size_t i = 0; i < k; ++i) v[i] = a[i][k];
        for (std::size_t j = 0; j < k; ++j) {
            R s(0);
            for (std::size_t i = 0; i < k; ++i) s = s + a[k][i] * v[i];
            q[j + 2] = R(0) - s;
            if (j + 1 == k) break;
            std::vector<R> w(k, R(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l) w[i] = w[i] + a[i][l] * v[l];
            v = std::move(w);
        }
        std::vector<R> nc(k + 2, R(0));
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j) nc[i] = nc[i] + q[i - j] * c[j];
        c = std::move(nc);
    }
    return (n % 2 == 0) ? c[n] : R(0) - c[n];
}

template <class S>
Matrix<S> identity_matrix(Index n) {
    return Matrix<S>::Identity(n, n);
}

} // namespace projendo
