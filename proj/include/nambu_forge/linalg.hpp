#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nambu_forge/poly.hpp"

namespace nforge {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;  // row-major
using PolyVector = std::vector<SparsePoly>;
using PolyMatrix = std::vector<PolyVector>;  // row-major

inline PolyVector zero_poly_vector(std::size_t len, std::size_t num_vars) {
    return PolyVector(len, SparsePoly(num_vars));
}

inline PolyMatrix zero_poly_matrix(std::size_t rows, std::size_t cols, std::size_t num_vars) {
    return PolyMatrix(rows, zero_poly_vector(cols, num_vars));
}

inline PolyMatrix identity_poly_matrix(std::size_t n, std::size_t num_vars) {
    PolyMatrix m = zero_poly_matrix(n, n, num_vars);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = SparsePoly::constant(num_vars, Rat(1));
    return m;
}

inline bool is_zero_vector(const PolyVector& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

inline bool is_zero_vector(const RatVector& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

// Laplace expansion along the first row; sizes here stay small (arity <= 6).
inline SparsePoly poly_det(const PolyMatrix& m, std::size_t num_vars) {
    std::size_t n = m.size();
    if (n == 0) return SparsePoly::constant(num_vars, Rat(1));
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    SparsePoly acc(num_vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            PolyVector row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        SparsePoly t = m[0][c] * poly_det(minor, num_vars);
        if (c % 2)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

inline Rat rat_det(RatMatrix m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Minor of `cols` (columns taken in the given order) over rows `rows` of a row-major matrix.
inline SparsePoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols, std::size_t num_vars) {
    PolyMatrix sub(rows.size(), PolyVector(cols.size(), SparsePoly(num_vars)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub[i][j] = m[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(cols[j])];
    return poly_det(sub, num_vars);
}

enum class SolveStatus { Solved, NoSolution, DegreeBoundExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    PolyVector solution;
    std::size_t rank = 0;
};

// Solves M c = b for a polynomial vector c using fraction-free (Bareiss) elimination over
// Q[x]. Columns without a pivot get c_j = 0. A solution of total degree above
// `degree_bound` is reported as DegreeBoundExceeded rather than accepted.
inline SolveResult solve_poly_system(const PolyMatrix& m, const PolyVector& b, std::size_t num_vars,
                                     long degree_bound = 4) {
    std::size_t rows = m.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
    std::size_t cols = rows ? m[0].size() : 0;
    PolyMatrix a(rows, PolyVector(cols + 1, SparsePoly(num_vars)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j] + SparsePoly(num_vars);
        a[i][cols] = b[i] + SparsePoly(num_vars);
    }

    SparsePoly prev = SparsePoly::constant(num_vars, Rat(1));
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // Prefer constant pivots to keep intermediate degrees low.
        std::size_t p = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            if (p == rows || (a[i][col].is_constant() && !a[p][col].is_constant())) p = i;
        }
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j <= cols; ++j) {
                SparsePoly t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                auto q = exact_divide(t, prev);
                if (!q) throw std::logic_error("fraction-free elimination lost exactness");
                a[i][j] = std::move(*q);
            }
            a[i][col] = SparsePoly(num_vars);
        }
        prev = a[row][col];
        pivot_cols.push_back(col);
        ++row;
    }

    SolveResult res;
    res.rank = pivot_cols.size();
    for (std::size_t i = row; i < rows; ++i)
        if (!a[i][cols].is_zero()) return res;

    PolyVector x(cols, SparsePoly(num_vars));
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        std::size_t col = pivot_cols[k];
        SparsePoly s = a[k][cols];
        for (std::size_t j = col + 1; j < cols; ++j)
            if (!a[k][j].is_zero() && !x[j].is_zero()) s -= a[k][j] * x[j];
        auto q = exact_divide(s, a[k][col]);
        if (!q) return res;
        x[col] = std::move(*q);
    }
    for (const auto& xi : x) {
        if (xi.total_degree() > degree_bound) {
            res.status = SolveStatus::DegreeBoundExceeded;
            res.solution = std::move(x);
            return res;
        }
    }
    res.status = SolveStatus::Solved;
    res.solution = std::move(x);
    return res;
}

// Rank over the fraction field Q(x).
inline std::size_t poly_matrix_rank(const PolyMatrix& m, std::size_t num_vars) {
    PolyVector zero(m.size(), SparsePoly(num_vars));
    return solve_poly_system(m, zero, num_vars, 1L << 30).rank;
}

// Reduced row echelon form over Q, in place; returns pivot columns.
inline std::vector<std::size_t> rat_rref(RatMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] -= f * a[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace nforge
