#pragma once

// Brute-force reference implementations used to validate the library. They share only the
// polynomial kernel with the code under test and avoid its tables, canonical keys and
// enumeration order.

#include <algorithm>
#include <numeric>
#include <vector>

#include "nambu_forge/nambu_forge.hpp"

namespace oracle {

using nforge::Rat;
using nforge::RatVector;
using nforge::SparsePoly;

inline int permutation_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

// Structure constant of [e_{i1}, .., e_{in}] along e_l, read from the table by sorting.
inline Rat constant(const nforge::NLieAlgebra& g, const std::vector<int>& idx, int l) {
    int s = permutation_sign(idx);
    if (s == 0) return Rat(0);
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [k, v] : g.table)
        if (k.indices() == sorted) return s > 0 ? v[l] : -v[l];
    return Rat(0);
}

// Multilinear bracket of arbitrary vectors: sum over all index tuples.
inline RatVector bracket(const nforge::NLieAlgebra& g, const std::vector<RatVector>& args) {
    const int d = g.dim, n = g.arity;
    RatVector out(d, Rat(0));
    std::vector<int> idx(n, 0);
    while (true) {
        Rat coeff(1);
        for (int k = 0; k < n && !coeff.is_zero(); ++k) coeff *= args[k][idx[k]];
        if (!coeff.is_zero())
            for (int l = 0; l < d; ++l) out[l] += coeff * constant(g, idx, l);
        int p = n - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

inline RatVector unit(int d, int k) {
    RatVector v(d, Rat(0));
    v[k] = Rat(1);
    return v;
}

// Fundamental identity on every ordered basis tuple (not only increasing ones).
inline bool fundamental_identity_holds(const nforge::NLieAlgebra& g) {
    const int d = g.dim, n = g.arity;
    std::vector<int> x(n - 1, 0), y(n, 0);
    auto advance = [d](std::vector<int>& v) {
        int p = static_cast<int>(v.size()) - 1;
        while (p >= 0 && ++v[p] == d) v[p--] = 0;
        return p >= 0;
    };
    do {
        do {
            std::vector<RatVector> ys;
            for (int k : y) ys.push_back(unit(d, k));
            std::vector<RatVector> args;
            for (int k : x) args.push_back(unit(d, k));
            auto with = [&](const RatVector& last) {
                auto a = args;
                a.push_back(last);
                return a;
            };
            RatVector lhs = bracket(g, with(bracket(g, ys)));
            RatVector rhs(d, Rat(0));
            for (int i = 0; i < n; ++i) {
                auto yi = ys;
                yi[i] = bracket(g, with(ys[i]));
                RatVector t = bracket(g, yi);
                for (int l = 0; l < d; ++l) rhs[l] += t[l];
            }
            if (lhs != rhs) return false;
        } while (advance(y));
    } while (advance(x));
    return true;
}

// Arity 3 only: wedge squares as antisymmetric d x d matrices, x acting on V through
// D_x(v) = sum_{i<j} x_ij [e_i, e_j, v] and on matrices by D Y + Y D^T.
using Mat = std::vector<RatVector>;

inline Mat zero_mat(int d) { return Mat(d, RatVector(d, Rat(0))); }

inline Mat wedge(int d, int a, int b) {
    Mat m = zero_mat(d);
    m[a][b] += Rat(1);
    m[b][a] -= Rat(1);
    return m;
}

inline Mat action(const nforge::NLieAlgebra& g, const Mat& x) {
    const int d = g.dim;
    Mat dm = zero_mat(d);  // dm[l][v] = coefficient of e_l in D_x(e_v)
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (x[i][j].is_zero()) continue;
            for (int v = 0; v < d; ++v)
                for (int l = 0; l < d; ++l) dm[l][v] += x[i][j] * constant(g, {i, j, v}, l);
        }
    return dm;
}

inline Mat leibniz(const nforge::NLieAlgebra& g, const Mat& x, const Mat& y) {
    const int d = g.dim;
    Mat dm = action(g, x), out = zero_mat(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                out[a][b] += dm[a][c] * y[c][b];
                out[a][b] += y[a][c] * dm[b][c];
            }
    return out;
}

inline bool leibniz_identity_holds(const nforge::NLieAlgebra& g) {
    const int d = g.dim;
    std::vector<Mat> basis;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) basis.push_back(wedge(d, a, b));
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) {
                Mat lhs = leibniz(g, x, leibniz(g, y, z));
                Mat r1 = leibniz(g, leibniz(g, x, y), z), r2 = leibniz(g, y, leibniz(g, x, z));
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        if (lhs[a][b] != r1[a][b] + r2[a][b]) return false;
            }
    return true;
}

// Jacobian determinant det(d f_k / d x_j) by the permutation expansion.
inline SparsePoly jacobian_det(const std::vector<SparsePoly>& fs, std::size_t m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePoly out(m);
    do {
        SparsePoly term = SparsePoly::constant(m, Rat(permutation_sign(perm)));
        for (std::size_t k = 0; k < m && !term.is_zero(); ++k) term = term * nforge::poly_partial(fs[k], perm[k]);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Nambu bracket as a sum over all ordered index tuples of pi^{i1..in} prod_k d f_k / d x_{ik}.
inline SparsePoly levi_civita_bracket(const nforge::NambuTensor& pi, const std::vector<SparsePoly>& fs) {
    const std::size_t m = pi.num_vars;
    const int n = pi.order;
    SparsePoly out(m);
    std::vector<int> idx(n, 0);
    while (true) {
        int s = permutation_sign(idx);
        if (s != 0) {
            std::vector<int> sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            for (const auto& [k, c] : pi.components) {
                if (k.indices() != sorted) continue;
                SparsePoly term = c * Rat(s);
                for (int a = 0; a < n && !term.is_zero(); ++a) term = term * nforge::poly_partial(fs[a], idx[a]);
                out += term;
            }
        }
        int p = n - 1;
        while (p >= 0 && ++idx[p] == static_cast<int>(m)) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

// Functional fundamental identity for the given probes, through the oracle bracket.
inline bool nambu_fi_holds(const nforge::NambuTensor& pi, const std::vector<SparsePoly>& probes) {
    const int n = pi.order;
    const std::size_t p = probes.size();
    std::vector<std::size_t> f(n - 1, 0), g(n, 0);
    auto advance = [p](std::vector<std::size_t>& v) {
        int q = static_cast<int>(v.size()) - 1;
        while (q >= 0 && ++v[q] == p) v[q--] = 0;
        return q >= 0;
    };
    do {
        do {
            std::vector<SparsePoly> fs, gs;
            for (auto i : f) fs.push_back(probes[i]);
            for (auto i : g) gs.push_back(probes[i]);
            auto with = [&](const SparsePoly& last) {
                auto a = fs;
                a.push_back(last);
                return a;
            };
            SparsePoly lhs = levi_civita_bracket(pi, with(levi_civita_bracket(pi, gs)));
            SparsePoly rhs(pi.num_vars);
            for (int i = 0; i < n; ++i) {
                auto gi = gs;
                gi[i] = levi_civita_bracket(pi, with(gs[i]));
                rhs += levi_civita_bracket(pi, gi);
            }
            if (!(lhs == rhs)) return false;
        } while (advance(g));
    } while (advance(f));
    return true;
}

}  // namespace oracle
