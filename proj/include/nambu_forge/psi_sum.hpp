#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nambu_forge/rinehart.hpp"

namespace nforge {

// Algebra map psi: A = Q[x1..xa] -> B = Q[x1..xb], given by the images of the generators.
struct AlgebraMap {
    std::size_t source_vars = 0;
    std::size_t target_vars = 0;
    std::vector<SparsePoly> images;

    void validate() const {
        if (images.size() != source_vars) throw std::invalid_argument("algebra map needs one image per source variable");
        for (const auto& p : images)
            if (p.num_vars() != target_vars && !p.is_zero())
                throw std::invalid_argument("algebra map image lives in the wrong ring");
    }
    SparsePoly operator()(const SparsePoly& a) const {
        if (source_vars == 0) return SparsePoly::constant(target_vars, a.constant_term());
        return poly_substitute(a, images) + SparsePoly(target_vars);
    }
    Section operator()(const Section& s) const {
        Section out;
        for (const auto& c : s) out.push_back((*this)(c));
        return out;
    }
    static AlgebraMap identity(std::size_t n) {
        AlgebraMap m{n, n, {}};
        for (std::size_t j = 0; j < n; ++j) m.images.push_back(SparsePoly::variable(n, j));
        return m;
    }

    friend bool operator==(const AlgebraMap&, const AlgebraMap&) = default;
};

// Element X + Y of (E (x)_A B) (+) F: `tensor` holds B-coefficients on the basis of E,
// `plain` is a section of F.
struct PsiSumElement {
    Section tensor;
    Section plain;

    friend bool operator==(const PsiSumElement&, const PsiSumElement&) = default;
};

namespace detail {

inline void check_pair(const NLieRinehart& e, const NLieRinehart& f, const AlgebraMap& psi) {
    e.validate();
    f.validate();
    psi.validate();
    if (e.arity != f.arity) throw std::invalid_argument("structures have different arities");
    if (psi.source_vars != e.num_vars || psi.target_vars != f.num_vars)
        throw std::invalid_argument("algebra map does not go from the first base ring to the second");
}

inline void check_elements(const NLieRinehart& e, const NLieRinehart& f, const std::vector<PsiSumElement>& us) {
    for (const auto& u : us) {
        if (static_cast<int>(u.tensor.size()) != e.rank || static_cast<int>(u.plain.size()) != f.rank)
            throw std::invalid_argument("psi-sum element has the wrong shape");
    }
}

// sum_K det(T_K) psi(rho_E(e_K)(a)) for tensor parts T of n-1 elements.
inline SparsePoly pushed_anchor(const NLieRinehart& e, const NLieRinehart& f, const AlgebraMap& psi,
                                const std::vector<Section>& tensors, const SparsePoly& a) {
    SparsePoly out(f.num_vars);
    for (const auto& [k, d] : e.anchor_table) {
        SparsePoly m = section_minor(tensors, k, f.num_vars);
        if (m.is_zero()) continue;
        SparsePoly v = d.apply(a);
        if (v.is_zero()) continue;
        out += m * psi(v);
    }
    return out;
}

}  // namespace detail

// Compatibility of (n-1) elements: for every probe a in A,
//   psi([X(1)..X(n-1), a]_E) b(1)..b(n-1) = [Y1..Y(n-1), psi(a)]_F.
// Both sides are psi-derivations in a, so generators decide; seeded random probes guard
// the reduction.
inline Verdict psi_sum_compatible(const NLieRinehart& e, const NLieRinehart& f, const AlgebraMap& psi,
                                  const std::vector<PsiSumElement>& tuple, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    detail::check_elements(e, f, tuple);
    if (static_cast<int>(tuple.size()) != e.arity - 1)
        throw std::invalid_argument("compatibility needs n-1 elements");
    std::vector<Section> tensors, plains;
    for (const auto& u : tuple) {
        tensors.push_back(u.tensor);
        plains.push_back(u.plain);
    }
    PolyDerivation rf = rinehart_anchor(f, plains);
    for (const auto& [label, a] : generator_probes(e.num_vars, opt)) {
        SparsePoly lhs = detail::pushed_anchor(e, f, psi, tensors, a);
        SparsePoly rhs = rf.apply(psi(a));
        if (lhs != rhs) return Verdict::fail(Witness{"psi-sum compatibility", {}, label, {lhs - rhs}});
    }
    return Verdict::pass();
}

// Bracket on the psi-sum:
//   [X1+Y1, .., Xn+Yn] = [X(1)..X(n)]_E (x) b(1)..b(n) + [Y1..Yn]_F
//                        + sum_j (-1)^(n+j) X(j) (x) [Y1..^Yj..Yn, b(j)]_F.
// Precondition: every (n-1)-subtuple is compatible.
inline PsiSumElement psi_sum_bracket(const NLieRinehart& e, const NLieRinehart& f, const AlgebraMap& psi,
                                     const std::vector<PsiSumElement>& us, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    detail::check_elements(e, f, us);
    const std::size_t n = static_cast<std::size_t>(e.arity);
    if (us.size() != n) throw std::invalid_argument("psi-sum bracket needs n elements");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PsiSumElement> sub;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sub.push_back(us[j]);
        if (!psi_sum_compatible(e, f, psi, sub, opt).passed)
            throw PreconditionError("psi-sum bracket arguments are not compatible");
    }
    std::vector<Section> tensors, plains;
    for (const auto& u : us) {
        tensors.push_back(u.tensor);
        plains.push_back(u.plain);
    }
    PsiSumElement out{zero_poly_vector(static_cast<std::size_t>(e.rank), f.num_vars), rinehart_bracket(f, plains)};
    for (const auto& [k, val] : e.bracket_table) {
        SparsePoly m = detail::section_minor(tensors, k, f.num_vars);
        if (!m.is_zero()) add_scaled(out.tensor, psi(val), m);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Section> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) rest.push_back(plains[i]);
        PolyDerivation d = rinehart_anchor(f, rest);
        if (d.is_zero()) continue;
        Section corr = apply_to_section(d, tensors[j]);
        int sign = parity_sign(n - (j + 1));
        for (std::size_t l = 0; l < corr.size(); ++l) {
            if (sign > 0)
                out.tensor[l] += corr[l];
            else
                out.tensor[l] -= corr[l];
        }
    }
    return out;
}

// Module maps are matrices over B. A forward map E (x)_A B -> F has shape d_F x d_E;
// a comodule map F -> E (x)_A B has shape d_E x d_F. Column k is the image of basis vector k.
struct ModuleMap {
    PolyMatrix matrix;
    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix[0].size(); }
    Section column(std::size_t k) const {
        Section s;
        for (const auto& row : matrix) s.push_back(row.at(k));
        return s;
    }
    // Applies the matrix to a coefficient vector.
    Section apply(const Section& v, std::size_t num_vars) const {
        Section out = zero_poly_vector(rows(), num_vars);
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols(); ++c)
                if (!matrix[r][c].is_zero() && !v[c].is_zero()) out[r] += matrix[r][c] * v[c];
        return out;
    }

    friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

namespace detail {

inline void check_matrix(const ModuleMap& m, int rows, int cols, std::size_t num_vars) {
    if (static_cast<int>(m.rows()) != rows || (rows > 0 && static_cast<int>(m.cols()) != cols))
        throw std::invalid_argument("module map has shape " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    for (const auto& row : m.matrix)
        for (const auto& p : row)
            if (p.num_vars() != num_vars && !p.is_zero())
                throw std::invalid_argument("module map entry lives in the wrong ring");
}

inline Section section_diff(const Section& a, const Section& b) {
    Section d = a;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return d;
}

}  // namespace detail

// Morphism (Psi, psi) from (A, E) to (B, F):
//   psi([X1..X(n-1), a]_E) = [Psi X1..Psi X(n-1), psi(a)]_F    (anchor condition)
//   Psi [X1..Xn]_E = [Psi X1..Psi Xn]_F                          (bracket condition)
// on basis tuples and generator probes.
inline Verdict check_morphism(const NLieRinehart& e, const NLieRinehart& f, const ModuleMap& map,
                              const AlgebraMap& psi, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    detail::check_matrix(map, f.rank, e.rank, f.num_vars);
    const int n = e.arity;
    auto probes = generator_probes(e.num_vars, opt);
    auto lows = combinations(e.rank, n - 1);
    auto anchor_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& k = lows[t / probes.size()];
        const auto& [label, a] = probes[t % probes.size()];
        SparsePoly lhs = psi(e.basis_anchor(k.indices()).apply(a));
        std::vector<Section> imgs;
        for (int i : k) imgs.push_back(map.column(static_cast<std::size_t>(i)));
        SparsePoly rhs = rinehart_anchor(f, imgs).apply(psi(a));
        if (lhs == rhs) return std::nullopt;
        return Witness{"morphism anchor condition", {k.indices()}, label, {lhs - rhs}};
    };
    if (auto w = first_failure(lows.size() * probes.size(), opt.jobs, anchor_task))
        return Verdict::fail(std::move(*w));
    auto tops = combinations(e.rank, n);
    auto bracket_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& k = tops[t];
        Section lhs = map.apply(psi(e.basis_bracket(k.indices())), f.num_vars);
        std::vector<Section> imgs;
        for (int i : k) imgs.push_back(map.column(static_cast<std::size_t>(i)));
        Section rhs = rinehart_bracket(f, imgs);
        if (lhs == rhs) return std::nullopt;
        return Witness{"morphism bracket condition", {k.indices()}, "", detail::section_diff(lhs, rhs)};
    };
    if (auto w = first_failure(tops.size(), opt.jobs, bracket_task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// Comorphism (Psi, psi) from (A, E) to (B, F) with Psi: F -> E (x)_A B, Psi(Yj) = sum_k e_k (x) b_kj:
//   [Y1..Y(n-1), psi(a)]_F = sum_K det(b_K) psi([e_K, a]_E)                  (anchor condition)
//   Psi [Y1..Yn]_F = sum b..b psi([e..]_E) + sum_i (-1)^(n-i) e_k (x) [Y..^Yi.., b_k,i]_F
//                                                                            (bracket condition)
// Arguments follow the direction of the comorphism: f first, then e.
inline Verdict check_comorphism(const NLieRinehart& f, const NLieRinehart& e, const ModuleMap& map,
                                const AlgebraMap& psi, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    detail::check_matrix(map, e.rank, f.rank, f.num_vars);
    const int n = e.arity;
    auto probes = generator_probes(e.num_vars, opt);
    auto lows = combinations(f.rank, n - 1);
    auto anchor_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& k = lows[t / probes.size()];
        const auto& [label, a] = probes[t % probes.size()];
        SparsePoly lhs = f.basis_anchor(k.indices()).apply(psi(a));
        std::vector<Section> cols;
        for (int i : k) cols.push_back(map.column(static_cast<std::size_t>(i)));
        SparsePoly rhs = detail::pushed_anchor(e, f, psi, cols, a);
        if (lhs == rhs) return std::nullopt;
        return Witness{"comorphism anchor condition", {k.indices()}, label, {lhs - rhs}};
    };
    if (auto w = first_failure(lows.size() * probes.size(), opt.jobs, anchor_task))
        return Verdict::fail(std::move(*w));
    auto tops = combinations(f.rank, n);
    auto bracket_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& k = tops[t];
        Section lhs = map.apply(f.basis_bracket(k.indices()), f.num_vars);
        std::vector<Section> cols;
        for (int i : k) cols.push_back(map.column(static_cast<std::size_t>(i)));
        Section rhs = zero_poly_vector(static_cast<std::size_t>(e.rank), f.num_vars);
        for (const auto& [idx, val] : e.bracket_table) {
            SparsePoly m = detail::section_minor(cols, idx, f.num_vars);
            if (!m.is_zero()) add_scaled(rhs, psi(val), m);
        }
        for (std::size_t i = 0; i < k.size(); ++i) {
            PolyDerivation d = f.basis_anchor(omit(k.indices(), i));
            if (d.is_zero()) continue;
            Section corr = apply_to_section(d, cols[i]);
            int sign = parity_sign(k.size() - (i + 1));
            for (std::size_t l = 0; l < corr.size(); ++l) {
                if (sign > 0)
                    rhs[l] += corr[l];
                else
                    rhs[l] -= corr[l];
            }
        }
        if (lhs == rhs) return std::nullopt;
        return Witness{"comorphism bracket condition", {k.indices()}, "", detail::section_diff(lhs, rhs)};
    };
    if (auto w = first_failure(tops.size(), opt.jobs, bracket_task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

enum class GraphKind { Morphism, Comorphism };

// Graph criterion: the graph of Psi inside the psi-sum must consist of compatible
// elements and be closed under the psi-sum bracket. Membership of bracket values is
// decided by exact elimination over B.
inline Verdict graph_check(const NLieRinehart& e, const NLieRinehart& f, const AlgebraMap& psi, GraphKind kind,
                           const ModuleMap& map, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    const std::size_t bv = f.num_vars;
    const std::size_t de = static_cast<std::size_t>(e.rank), df = static_cast<std::size_t>(f.rank);
    std::vector<PsiSumElement> gens;
    if (kind == GraphKind::Morphism) {
        detail::check_matrix(map, f.rank, e.rank, bv);
        for (std::size_t k = 0; k < de; ++k) {
            Section t = zero_poly_vector(de, bv);
            t[k] = SparsePoly::constant(bv, Rat(1));
            gens.push_back({t, map.column(k)});
        }
    } else {
        detail::check_matrix(map, e.rank, f.rank, bv);
        for (std::size_t k = 0; k < df; ++k) {
            Section p = zero_poly_vector(df, bv);
            p[k] = SparsePoly::constant(bv, Rat(1));
            gens.push_back({map.column(k), p});
        }
    }
    // Spanning matrix of the graph, tensor rows first.
    PolyMatrix span = zero_poly_matrix(de + df, gens.size(), bv);
    for (std::size_t c = 0; c < gens.size(); ++c) {
        for (std::size_t r = 0; r < de; ++r) span[r][c] = gens[c].tensor[r];
        for (std::size_t r = 0; r < df; ++r) span[de + r][c] = gens[c].plain[r];
    }
    const int n = e.arity;
    int g = static_cast<int>(gens.size());
    for (const auto& k : combinations(g, n - 1)) {
        std::vector<PsiSumElement> tuple;
        for (int i : k) tuple.push_back(gens[static_cast<std::size_t>(i)]);
        Verdict v = psi_sum_compatible(e, f, psi, tuple, opt);
        if (!v.passed) {
            v.witness->condition = "graph compatibility";
            v.witness->tuples = {k.indices()};
            return v;
        }
    }
    for (const auto& k : combinations(g, n)) {
        std::vector<PsiSumElement> tuple;
        for (int i : k) tuple.push_back(gens[static_cast<std::size_t>(i)]);
        PsiSumElement w = psi_sum_bracket(e, f, psi, tuple, opt);
        Section stacked = w.tensor;
        stacked.insert(stacked.end(), w.plain.begin(), w.plain.end());
        SolveResult sol = solve_poly_system(span, stacked, bv, opt.degree_bound);
        if (sol.status != SolveStatus::Solved)
            return Verdict::fail(Witness{sol.status == SolveStatus::NoSolution
                                             ? "graph bracket closure"
                                             : "graph bracket closure (degree bound exceeded)",
                                         {k.indices()}, "", stacked});
    }
    return Verdict::pass();
}

// Forms on the Leibniz-Rinehart module W = exterior (n-1)-power of E. A form of degree k
// (k copies of W) is stored by its values on increasing k-tuples of W-basis positions;
// degree 0 uses the empty key.
struct DualForm {
    int degree = 0;
    std::map<MultiIndex, SparsePoly> values;

    SparsePoly value(std::span<const int> positions, std::size_t num_vars) const {
        auto [idx, sign] = canonical_multiindex(positions);
        if (sign == 0) return SparsePoly(num_vars);
        auto it = values.find(idx);
        if (it == values.end()) return SparsePoly(num_vars);
        return sign > 0 ? it->second + SparsePoly(num_vars) : -it->second + SparsePoly(num_vars);
    }
};

inline DualForm function_form(const SparsePoly& a) { return DualForm{0, {{MultiIndex(), a}}}; }

// Dual basis element of W* for W-basis position k.
inline DualForm dual_basis_form(const LeibnizRinehart& l, std::size_t k) {
    return DualForm{1, {{MultiIndex{static_cast<int>(k)}, SparsePoly::constant(l.base.num_vars, Rat(1))}}};
}

// d(w)(x1..x(k+1)) = sum_i (-1)^(i-1) rho(xi) w(..^xi..)
//                  + sum_(i<j) (-1)^(i+j) w([xi, xj], ..^xi..^xj..)
// evaluated on increasing tuples of W-basis elements. Degree 0 and 1 are the cases the
// theory uses; degree 2 is experimental.
inline DualForm d_operator(const LeibnizRinehart& l, const DualForm& w) {
    if (w.degree < 0 || w.degree > 2) throw std::invalid_argument("d is implemented for form degree 0, 1, 2");
    const std::size_t m = l.base.num_vars;
    const int nb = static_cast<int>(l.size());
    DualForm out{w.degree + 1, {}};
    std::map<std::pair<int, int>, WedgeElement> brackets;
    auto bracket = [&](int a, int b) -> const WedgeElement& {
        auto it = brackets.find({a, b});
        if (it == brackets.end())
            it = brackets.emplace(std::make_pair(a, b), lr_bracket(l, l.unit(static_cast<std::size_t>(a)),
                                                                   l.unit(static_cast<std::size_t>(b)))).first;
        return it->second;
    };
    for (const auto& key : combinations(nb, w.degree + 1)) {
        const auto& x = key.indices();
        SparsePoly acc(m);
        for (std::size_t i = 0; i < x.size(); ++i) {
            SparsePoly inner = w.value(omit(x, i), m);
            if (inner.is_zero()) continue;
            SparsePoly t = lr_anchor(l, l.unit(static_cast<std::size_t>(x[i]))).apply(inner);
            if (i % 2 == 0)
                acc += t;
            else
                acc -= t;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                const WedgeElement& br = bracket(x[i], x[j]);
                std::vector<int> rest;
                for (std::size_t k = 0; k < x.size(); ++k)
                    if (k != i && k != j) rest.push_back(x[k]);
                SparsePoly t(m);
                for (int q = 0; q < nb; ++q) {
                    if (br[static_cast<std::size_t>(q)].is_zero()) continue;
                    std::vector<int> args{q};
                    args.insert(args.end(), rest.begin(), rest.end());
                    SparsePoly v = w.value(args, m);
                    if (!v.is_zero()) t += br[static_cast<std::size_t>(q)] * v;
                }
                if ((i + j) % 2 == 0)
                    acc += t;
                else
                    acc -= t;
            }
        }
        if (!acc.is_zero()) out.values.emplace(key, std::move(acc));
    }
    return out;
}

namespace detail {

// c[J][K]: coefficient of e_K in Psi(f_J) = wedge of the columns of Psi indexed by J.
inline std::vector<std::vector<SparsePoly>> wedge_power(const LeibnizRinehart& le, const LeibnizRinehart& lf,
                                                        const ModuleMap& map, std::size_t bv) {
    std::vector<std::vector<SparsePoly>> c(lf.size(), std::vector<SparsePoly>(le.size(), SparsePoly(bv)));
    for (std::size_t j = 0; j < lf.size(); ++j)
        for (std::size_t k = 0; k < le.size(); ++k)
            c[j][k] = poly_minor(map.matrix, le.basis[k].indices(), lf.basis[j].indices(), bv);
    return c;
}

// Pull-back of a form on W_E to W_F along the comodule map (psi applied to values).
inline DualForm pull_back(const DualForm& w, const std::vector<std::vector<SparsePoly>>& c, const AlgebraMap& psi,
                          std::size_t ne, std::size_t nf, std::size_t bv) {
    DualForm out{w.degree, {}};
    for (const auto& key : combinations(static_cast<int>(nf), w.degree)) {
        SparsePoly acc(bv);
        if (w.degree == 0) {
            acc = psi(w.value({}, psi.source_vars));
        } else {
            // Sum over all ordered tuples of W_E positions.
            std::vector<int> pos(static_cast<std::size_t>(w.degree), 0);
            while (true) {
                SparsePoly coeff = SparsePoly::constant(bv, Rat(1));
                for (std::size_t s = 0; s < pos.size() && !coeff.is_zero(); ++s)
                    coeff = coeff * c[static_cast<std::size_t>(key[s])][static_cast<std::size_t>(pos[s])];
                if (!coeff.is_zero()) {
                    SparsePoly v = w.value(pos, psi.source_vars);
                    if (!v.is_zero()) acc += coeff * psi(v);
                }
                std::size_t s = 0;
                while (s < pos.size() && ++pos[s] == static_cast<int>(ne)) pos[s++] = 0;
                if (s == pos.size()) break;
            }
        }
        if (!acc.is_zero()) out.values.emplace(key, std::move(acc));
    }
    return out;
}

inline std::optional<Witness> compare_forms(const DualForm& a, const DualForm& b, std::string cond, std::string probe) {
    std::map<MultiIndex, bool> keys;
    for (const auto& [k, v] : a.values) keys[k] = true;
    for (const auto& [k, v] : b.values) keys[k] = true;
    for (const auto& [k, unused] : keys) {
        auto ia = a.values.find(k);
        auto ib = b.values.find(k);
        SparsePoly va = ia == a.values.end() ? SparsePoly() : ia->second;
        SparsePoly vb = ib == b.values.end() ? SparsePoly() : ib->second;
        if (va != vb) return Witness{std::move(cond), {k.indices()}, std::move(probe), {va - vb}};
    }
    return std::nullopt;
}

}  // namespace detail

// Intertwining d_F o Psi* = Psi* o d_E for a comorphism candidate, on degree 0
// (generator probes) and degree n-1 (the dual basis of W_E). Witness tuples are positions in
// the W_F basis.
inline Verdict check_intertwine(const NLieRinehart& e, const NLieRinehart& f, const ModuleMap& map,
                                const AlgebraMap& psi, const CheckOptions& opt = {}) {
    detail::check_pair(e, f, psi);
    detail::check_matrix(map, e.rank, f.rank, f.num_vars);
    LeibnizRinehart le = induced_leibniz_rinehart(e), lf = induced_leibniz_rinehart(f);
    const std::size_t bv = f.num_vars;
    auto c = detail::wedge_power(le, lf, map, bv);
    for (const auto& [label, a] : generator_probes(e.num_vars, opt)) {
        DualForm lhs = d_operator(lf, function_form(psi(a)));
        DualForm rhs = detail::pull_back(d_operator(le, function_form(a)), c, psi, le.size(), lf.size(), bv);
        if (auto w = detail::compare_forms(lhs, rhs, "intertwining on functions", label)) return Verdict::fail(std::move(*w));
    }
    for (std::size_t k = 0; k < le.size(); ++k) {
        DualForm xi = dual_basis_form(le, k);
        DualForm lhs = d_operator(lf, detail::pull_back(xi, c, psi, le.size(), lf.size(), bv));
        DualForm rhs = detail::pull_back(d_operator(le, xi), c, psi, le.size(), lf.size(), bv);
        if (auto w = detail::compare_forms(lhs, rhs, "intertwining on dual basis", "dual of " + le.basis[k].str()))
            return Verdict::fail(std::move(*w));
    }
    return Verdict::pass();
}

}  // namespace nforge
