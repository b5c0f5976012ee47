#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nambu_forge/linalg.hpp"
#include "nambu_forge/multi_index.hpp"
#include "nambu_forge/verdict.hpp"

namespace nforge {

// n-Lie algebra over Q given by structure constants on increasing basis n-tuples.
// Absent keys mean a zero bracket.
struct NLieAlgebra {
    int arity = 2;
    int dim = 0;
    std::map<MultiIndex, RatVector> table;

    void validate() const {
        if (arity < 2) throw std::invalid_argument("arity must be at least 2");
        if (dim < 0) throw std::invalid_argument("negative dimension");
        for (const auto& [k, v] : table) {
            if (static_cast<int>(k.size()) != arity)
                throw std::invalid_argument("table key " + k.str() + " has the wrong length");
            if (!k.empty() && k.indices().back() >= dim)
                throw std::invalid_argument("table key " + k.str() + " exceeds the dimension");
            if (static_cast<int>(v.size()) != dim)
                throw std::invalid_argument("table value for " + k.str() + " has the wrong length");
        }
    }

    // Bracket of basis vectors in any order (skew extension of the table).
    RatVector basis_bracket(std::span<const int> seq) const {
        auto [idx, sign] = canonical_multiindex(seq);
        RatVector out(static_cast<std::size_t>(dim));
        if (sign == 0) return out;
        auto it = table.find(idx);
        if (it == table.end()) return out;
        for (int l = 0; l < dim; ++l) out[l] = sign > 0 ? it->second[l] : -it->second[l];
        return out;
    }

    friend bool operator==(const NLieAlgebra&, const NLieAlgebra&) = default;
};

inline RatVector basis_vector(int dim, int k) {
    RatVector v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(k)] = Rat(1);
    return v;
}

// Multilinear skew extension: sum over increasing I of det(args restricted to I) [e_I].
inline RatVector nlie_bracket(const NLieAlgebra& g, const std::vector<RatVector>& args) {
    if (static_cast<int>(args.size()) != g.arity)
        throw std::invalid_argument("bracket needs exactly " + std::to_string(g.arity) + " arguments");
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != g.dim)
            throw std::invalid_argument("bracket argument has the wrong dimension");
    RatVector out(static_cast<std::size_t>(g.dim));
    for (const auto& [idx, val] : g.table) {
        RatMatrix sub(args.size(), RatVector(args.size()));
        for (std::size_t r = 0; r < args.size(); ++r)
            for (std::size_t c = 0; c < args.size(); ++c) sub[r][c] = args[r][idx[c]];
        Rat d = rat_det(std::move(sub));
        if (d.is_zero()) continue;
        for (int l = 0; l < g.dim; ++l) out[l] += d * val[l];
    }
    return out;
}

namespace detail {

// [e_X1, ..., e_X(n-1), v] for a basis prefix X and an arbitrary last vector v.
inline RatVector ad_basis(const NLieAlgebra& g, std::span<const int> x, const RatVector& v) {
    RatVector out(static_cast<std::size_t>(g.dim));
    for (int l = 0; l < g.dim; ++l) {
        if (v[l].is_zero()) continue;
        RatVector b = g.basis_bracket(with_appended(x, l));
        for (int k = 0; k < g.dim; ++k) out[k] += v[l] * b[k];
    }
    return out;
}

// Bracket of the basis tuple `y` with slot i replaced by the vector v.
inline RatVector bracket_replacing(const NLieAlgebra& g, std::span<const int> y, std::size_t i,
                                   const RatVector& v) {
    RatVector out(static_cast<std::size_t>(g.dim));
    for (int l = 0; l < g.dim; ++l) {
        if (v[l].is_zero()) continue;
        RatVector b = g.basis_bracket(with_replaced(y, i, l));
        for (int k = 0; k < g.dim; ++k) out[k] += v[l] * b[k];
    }
    return out;
}

}  // namespace detail

// Checks [X, [Y1..Yn]] = sum_i [Y1.., [X, Yi], ..Yn] on increasing basis tuples.
// X ranges over (n-1)-tuples, Y over n-tuples; the first failure in that order is reported.
inline Verdict check_fundamental_identity(const NLieAlgebra& g, const CheckOptions& opt = {}) {
    g.validate();
    auto xs = combinations(g.dim, g.arity - 1);
    auto ys = combinations(g.dim, g.arity);
    std::size_t total = xs.size() * ys.size();
    auto task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = xs[t / ys.size()];
        const auto& y = ys[t % ys.size()];
        RatVector inner = g.basis_bracket(y.indices());
        RatVector lhs = detail::ad_basis(g, x.indices(), inner);
        RatVector rhs(static_cast<std::size_t>(g.dim));
        for (std::size_t i = 0; i < y.size(); ++i) {
            RatVector xy = g.basis_bracket(with_appended(x.indices(), y[i]));
            RatVector term = detail::bracket_replacing(g, y.indices(), i, xy);
            for (int k = 0; k < g.dim; ++k) rhs[k] += term[k];
        }
        if (lhs == rhs) return std::nullopt;
        RatVector res(static_cast<std::size_t>(g.dim));
        for (int k = 0; k < g.dim; ++k) res[k] = lhs[k] - rhs[k];
        return Witness{"fundamental identity", {x.indices(), y.indices()}, "", constant_residual(res)};
    };
    if (auto w = first_failure(total, opt.jobs, task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// Element of the (n-1)-th exterior power, keyed by increasing basis tuples.
using FundamentalElement = std::map<MultiIndex, Rat>;

inline void add_to(FundamentalElement& acc, const MultiIndex& k, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Leibniz algebra induced on the (n-1)-th exterior power by
// [x, y] = sum_i y1 ^ .. ^ [x, yi] ^ .. ^ y(n-1) for decomposable x, y.
struct LeibnizAlgebra {
    int arity = 2;
    int dim = 0;                       // dimension of the underlying n-Lie algebra
    std::vector<MultiIndex> basis;     // increasing (n-1)-tuples, lexicographic
    std::map<std::pair<MultiIndex, MultiIndex>, FundamentalElement> table;  // nonzero entries
};

inline LeibnizAlgebra induced_leibniz(const NLieAlgebra& g) {
    g.validate();
    LeibnizAlgebra out;
    out.arity = g.arity;
    out.dim = g.dim;
    out.basis = combinations(g.dim, g.arity - 1);
    for (const auto& x : out.basis) {
        for (const auto& y : out.basis) {
            FundamentalElement acc;
            for (std::size_t i = 0; i < y.size(); ++i) {
                RatVector v = g.basis_bracket(with_appended(x.indices(), y[i]));
                for (int l = 0; l < g.dim; ++l) {
                    if (v[l].is_zero()) continue;
                    auto [k, s] = canonical_multiindex(with_replaced(y.indices(), i, l));
                    if (s != 0) add_to(acc, k, s > 0 ? v[l] : -v[l]);
                }
            }
            if (!acc.empty()) out.table.emplace(std::make_pair(x, y), std::move(acc));
        }
    }
    return out;
}

inline FundamentalElement leibniz_bracket(const LeibnizAlgebra& l, const FundamentalElement& x,
                                          const FundamentalElement& y) {
    FundamentalElement out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            auto it = l.table.find({kx, ky});
            if (it == l.table.end()) continue;
            for (const auto& [k, c] : it->second) add_to(out, k, cx * cy * c);
        }
    }
    return out;
}

// Leibniz identity [x, [y, z]] = [[x, y], z] + [y, [x, z]] on basis triples.
inline Verdict check_leibniz_identity(const LeibnizAlgebra& l, const CheckOptions& opt = {}) {
    std::size_t n = l.basis.size();
    auto task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = l.basis[t / (n * n)];
        const auto& y = l.basis[(t / n) % n];
        const auto& z = l.basis[t % n];
        FundamentalElement ex{{x, Rat(1)}}, ey{{y, Rat(1)}}, ez{{z, Rat(1)}};
        FundamentalElement lhs = leibniz_bracket(l, ex, leibniz_bracket(l, ey, ez));
        FundamentalElement rhs = leibniz_bracket(l, leibniz_bracket(l, ex, ey), ez);
        for (const auto& [k, c] : leibniz_bracket(l, ey, leibniz_bracket(l, ex, ez))) add_to(rhs, k, c);
        if (lhs == rhs) return std::nullopt;
        FundamentalElement res = lhs;
        for (const auto& [k, c] : rhs) add_to(res, k, -c);
        Witness w{"Leibniz identity", {x.indices(), y.indices(), z.indices()}, "", {}};
        for (const auto& b : l.basis) {
            auto it = res.find(b);
            w.residual.push_back(SparsePoly::constant(0, it == res.end() ? Rat(0) : it->second));
        }
        return w;
    };
    if (auto w = first_failure(n * n * n, opt.jobs, task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// Representation on Q^width: a matrix for each increasing (n-1)-tuple.
struct RepTable {
    int width = 0;
    std::map<MultiIndex, RatMatrix> table;

    RatMatrix basis_matrix(std::span<const int> seq) const {
        RatMatrix out(static_cast<std::size_t>(width), RatVector(static_cast<std::size_t>(width)));
        auto [idx, sign] = canonical_multiindex(seq);
        if (sign == 0) return out;
        auto it = table.find(idx);
        if (it == table.end()) return out;
        for (int r = 0; r < width; ++r)
            for (int c = 0; c < width; ++c) out[r][c] = sign > 0 ? it->second[r][c] : -it->second[r][c];
        return out;
    }

    friend bool operator==(const RepTable&, const RepTable&) = default;
};

namespace detail {

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size();
    RatMatrix out(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline void mat_axpy(RatMatrix& acc, const Rat& s, const RatMatrix& m) {
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc.size(); ++j) acc[i][j] += s * m[i][j];
}

inline Witness matrix_witness(std::string cond, std::vector<std::vector<int>> tuples,
                              const RatMatrix& lhs, const RatMatrix& rhs) {
    Witness w{std::move(cond), std::move(tuples), "", {}};
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs.size(); ++j)
            w.residual.push_back(SparsePoly::constant(0, lhs[i][j] - rhs[i][j]));
    return w;
}

}  // namespace detail

// rho(x)(y) = [x..., y]
inline RepTable adjoint_representation(const NLieAlgebra& g) {
    RepTable rep;
    rep.width = g.dim;
    for (const auto& k : combinations(g.dim, g.arity - 1)) {
        RatMatrix m(static_cast<std::size_t>(g.dim), RatVector(static_cast<std::size_t>(g.dim)));
        bool nonzero = false;
        for (int col = 0; col < g.dim; ++col) {
            RatVector v = g.basis_bracket(with_appended(k.indices(), col));
            for (int row = 0; row < g.dim; ++row) {
                m[row][col] = v[row];
                if (!v[row].is_zero()) nonzero = true;
            }
        }
        if (nonzero) rep.table.emplace(k, std::move(m));
    }
    return rep;
}

// Checks both representation identities on basis tuples:
//   [rho(X), rho(Y)] = sum_i rho(Y1, .., [X, Yi], .., Y(n-1))
//   rho(X1..X(n-2), [Y1..Yn]) = sum_i (-1)^(n-i) rho(Y1..^Yi..Yn) rho(X1..X(n-2), Yi)
inline Verdict check_representation(const NLieAlgebra& g, const RepTable& rep,
                                    const CheckOptions& opt = {}) {
    g.validate();
    for (const auto& [k, m] : rep.table) {
        if (static_cast<int>(k.size()) != g.arity - 1)
            throw std::invalid_argument("representation key " + k.str() + " has the wrong length");
        if (static_cast<int>(m.size()) != rep.width)
            throw std::invalid_argument("representation matrix has the wrong size");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != rep.width)
                throw std::invalid_argument("representation matrix has the wrong size");
    }
    const int n = g.arity;
    auto pairs = combinations(g.dim, n - 1);
    std::size_t first_total = pairs.size() * pairs.size();
    auto first = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = pairs[t / pairs.size()];
        const auto& y = pairs[t % pairs.size()];
        RatMatrix rx = rep.basis_matrix(x.indices()), ry = rep.basis_matrix(y.indices());
        RatMatrix lhs = detail::mat_mul(rx, ry);
        detail::mat_axpy(lhs, Rat(-1), detail::mat_mul(ry, rx));
        RatMatrix rhs(static_cast<std::size_t>(rep.width), RatVector(static_cast<std::size_t>(rep.width)));
        for (std::size_t i = 0; i < y.size(); ++i) {
            RatVector v = g.basis_bracket(with_appended(x.indices(), y[i]));
            for (int l = 0; l < g.dim; ++l)
                detail::mat_axpy(rhs, v[l], rep.basis_matrix(with_replaced(y.indices(), i, l)));
        }
        if (lhs == rhs) return std::nullopt;
        return detail::matrix_witness("representation commutator identity", {x.indices(), y.indices()},
                                      lhs, rhs);
    };
    if (auto w = first_failure(first_total, opt.jobs, first)) return Verdict::fail(std::move(*w));

    auto xs = combinations(g.dim, n - 2);
    auto ys = combinations(g.dim, n);
    auto second = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = xs[t / ys.size()];
        const auto& y = ys[t % ys.size()];
        RatVector br = g.basis_bracket(y.indices());
        RatMatrix lhs(static_cast<std::size_t>(rep.width), RatVector(static_cast<std::size_t>(rep.width)));
        for (int l = 0; l < g.dim; ++l)
            detail::mat_axpy(lhs, br[l], rep.basis_matrix(with_appended(x.indices(), l)));
        RatMatrix rhs(static_cast<std::size_t>(rep.width), RatVector(static_cast<std::size_t>(rep.width)));
        for (std::size_t i = 0; i < y.size(); ++i) {
            // 1-based position i+1, sign (-1)^(n-(i+1))
            int sign = parity_sign(static_cast<std::size_t>(n) - (i + 1));
            RatMatrix prod = detail::mat_mul(rep.basis_matrix(omit(y.indices(), i)),
                                             rep.basis_matrix(with_appended(x.indices(), y[i])));
            detail::mat_axpy(rhs, Rat(sign), prod);
        }
        if (lhs == rhs) return std::nullopt;
        return detail::matrix_witness("representation bracket identity", {x.indices(), y.indices()},
                                      lhs, rhs);
    };
    if (auto w = first_failure(xs.size() * ys.size(), opt.jobs, second))
        return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// The 4-dimensional 3-Lie algebra [e_i, e_j, e_k] = sum_l eps_ijkl e_l.
inline NLieAlgebra builtin_v4() {
    NLieAlgebra g;
    g.arity = 3;
    g.dim = 4;
    auto put = [&](MultiIndex k, int l, int s) {
        RatVector v(4);
        v[static_cast<std::size_t>(l)] = Rat(s);
        g.table.emplace(std::move(k), std::move(v));
    };
    put({0, 1, 2}, 3, 1);
    put({0, 1, 3}, 2, -1);
    put({0, 2, 3}, 1, 1);
    put({1, 2, 3}, 0, -1);
    return g;
}

}  // namespace nforge
