#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nambu_forge/nambu.hpp"
#include "nambu_forge/psi_sum.hpp"
#include "nambu_forge/rinehart.hpp"

namespace nforge {

// n-Lie algebroid on the trivial bundle Q^m x Q^r; sections are polynomial combinations of
// the global frame, so the structure is an n-Lie-Rinehart algebra over Q[x1..xm].
struct NLieAlgebroid {
    NLieRinehart structure;

    int arity() const { return structure.arity; }
    int rank() const { return structure.rank; }
    std::size_t base_dim() const { return structure.num_vars; }

    friend bool operator==(const NLieAlgebroid&, const NLieAlgebroid&) = default;
};

// Forward map E1 -> E2 over phi: M -> N. fiber[l][k] is the e2_l-coefficient of the image
// of e1_k, a polynomial on M.
struct BundleMapForward {
    PolyMap base;
    PolyMatrix fiber;

    friend bool operator==(const BundleMapForward&, const BundleMapForward&) = default;
};

// Comorphism phi^! E2 -> E1; pullback[k][l] is the e1_k-coefficient of the pullback of the
// section e2_l, a polynomial on M.
struct BundleMapCo {
    PolyMap base;
    PolyMatrix pullback;

    friend bool operator==(const BundleMapCo&, const BundleMapCo&) = default;
};

// Subbundle H along N: the columns of `basis` (rank x h, polynomials on M) span H over N.
struct Subbundle {
    PolySubmanifold base;
    PolyMatrix basis;

    std::size_t size() const { return basis.empty() ? 0 : basis[0].size(); }
    Section column(std::size_t c) const {
        Section s;
        for (const auto& row : basis) s.push_back(row.at(c));
        return s;
    }

    friend bool operator==(const Subbundle&, const Subbundle&) = default;
};

inline AlgebraMap pullback_map(const PolyMap& phi) {
    phi.validate();
    AlgebraMap a{phi.target_dim, phi.source_dim, {}};
    for (const auto& c : phi.components) a.images.push_back(c + SparsePoly(phi.source_dim));
    return a;
}

// Algebroid with bracket and anchor multiplied by `sign`.
inline NLieAlgebroid twisted(const NLieAlgebroid& a, int sign) {
    NLieAlgebroid out = a;
    if (sign > 0) return out;
    for (auto& [k, d] : out.structure.anchor_table) d = d * Rat(-1);
    for (auto& [k, v] : out.structure.bracket_table)
        for (auto& c : v) c = -c;
    return out;
}

// Checks the axioms plus the anchor relation [rho(X), rho(Y)] = sum_i rho(.., [X, Yi], ..)
// evaluated as derivations on the coordinate functions.
inline Verdict check_algebroid(const NLieAlgebroid& a, const CheckOptions& opt = {}) {
    const auto& r = a.structure;
    Verdict v = check_rinehart(r, opt);
    if (!v.passed) return v;
    const std::size_t m = r.num_vars;
    auto lows = combinations(r.rank, r.arity - 1);
    auto task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = lows[t / lows.size()];
        const auto& y = lows[t % lows.size()];
        PolyDerivation dx = r.basis_anchor(x.indices()), dy = r.basis_anchor(y.indices());
        auto xs = basis_sections(r, x.indices());
        auto ys = basis_sections(r, y.indices());
        for (std::size_t j = 0; j < m; ++j) {
            SparsePoly xj = SparsePoly::variable(m, j);
            SparsePoly lhs = dx.apply(dy.apply(xj)) - dy.apply(dx.apply(xj));
            SparsePoly rhs(m);
            for (std::size_t i = 0; i < ys.size(); ++i) {
                auto args = xs;
                args.push_back(ys[i]);
                auto mod = ys;
                mod[i] = rinehart_bracket(r, args);
                rhs += rinehart_anchor(r, mod).apply(xj);
            }
            if (lhs != rhs)
                return Witness{"anchor relation on coordinates", {x.indices(), y.indices()}, xj.str(), {lhs - rhs}};
        }
        return std::nullopt;
    };
    if (auto w = first_failure(lows.size() * lows.size(), opt.jobs, task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

struct SubalgebroidResult {
    Verdict verdict;
    std::optional<NLieAlgebroid> induced;  // structure on H over N, in the kept coordinates of N
};

namespace detail {

inline std::vector<bool> dropped_vars(const PolySubmanifold& n_sub) {
    std::vector<bool> mask(n_sub.num_vars, false);
    const auto& v = n_sub.kind == SubmanifoldKind::Coordinate ? n_sub.vars : n_sub.outputs;
    for (int j : v) mask[static_cast<std::size_t>(j)] = true;
    return mask;
}

}  // namespace detail

// H is a subalgebroid along N when
//   (b) rho(h1 ^ .. ^ h(n-1)) is tangent to N for H-basis sections, and
//   (a) brackets of H-basis sections, restricted to N, lie in the span of H.
// Basis sections suffice: by (b), Leibniz corrections and sections vanishing on N stay in H.
inline SubalgebroidResult check_subalgebroid(const NLieAlgebroid& a, const Subbundle& h,
                                             const CheckOptions& opt = {}) {
    const auto& r = a.structure;
    r.validate();
    h.base.validate();
    if (h.base.num_vars != r.num_vars) throw std::invalid_argument("subbundle base lives on a different space");
    if (static_cast<int>(h.basis.size()) != r.rank) throw std::invalid_argument("subbundle basis has the wrong number of rows");
    const std::size_t m = r.num_vars, k = h.size();
    const auto& n_sub = h.base;
    std::vector<Section> cols;
    for (std::size_t c = 0; c < k; ++c) cols.push_back(h.column(c));
    PolyMatrix reduced = zero_poly_matrix(static_cast<std::size_t>(r.rank), k, m);
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t c = 0; c < k; ++c) reduced[i][c] = n_sub.reduce(h.basis[i][c]);
    if (poly_matrix_rank(reduced, m) != k) throw PreconditionError("subbundle basis is not of full rank along the base");

    auto defs = n_sub.defining_functions();
    const int n = r.arity;
    SubalgebroidResult res;
    auto lows = combinations(static_cast<int>(k), n - 1);
    std::vector<PolyDerivation> anchors;
    for (const auto& idx : lows) {
        std::vector<Section> args;
        for (int c : idx) args.push_back(cols[static_cast<std::size_t>(c)]);
        anchors.push_back(rinehart_anchor(r, args));
        for (std::size_t d = 0; d < defs.size(); ++d) {
            SparsePoly v = n_sub.reduce(anchors.back().apply(defs[d]));
            if (!v.is_zero()) {
                res.verdict = Verdict::fail(
                    Witness{"subalgebroid anchor tangency", {idx.indices(), {static_cast<int>(d)}}, defs[d].str(), {v}});
                return res;
            }
        }
    }
    auto tops = combinations(static_cast<int>(k), n);
    std::vector<PolyVector> coeffs;
    for (const auto& idx : tops) {
        std::vector<Section> args;
        for (int c : idx) args.push_back(cols[static_cast<std::size_t>(c)]);
        Section b = rinehart_bracket(r, args);
        for (auto& p : b) p = n_sub.reduce(p);
        SolveResult sol = solve_poly_system(reduced, b, m, opt.degree_bound);
        if (sol.status != SolveStatus::Solved) {
            res.verdict = Verdict::fail(Witness{sol.status == SolveStatus::NoSolution
                                                    ? "subalgebroid bracket closure"
                                                    : "subalgebroid bracket closure (degree bound exceeded)",
                                                {idx.indices()}, "", b});
            return res;
        }
        coeffs.push_back(std::move(sol.solution));
    }
    res.verdict = Verdict::pass();

    auto mask = detail::dropped_vars(n_sub);
    std::size_t kept = 0;
    for (bool b : mask)
        if (!b) ++kept;
    auto restrict_poly = [&](const SparsePoly& p) { return poly_drop_vars(n_sub.reduce(p), mask); };
    NLieAlgebroid induced{zero_rinehart(n, static_cast<int>(k), kept)};
    for (std::size_t t = 0; t < lows.size(); ++t) {
        std::vector<SparsePoly> comps;
        for (std::size_t j = 0; j < m; ++j)
            if (!mask[j]) comps.push_back(restrict_poly(anchors[t].component(j)));
        PolyDerivation d(std::move(comps));
        if (!d.is_zero()) induced.structure.anchor_table.emplace(lows[t], std::move(d));
    }
    for (std::size_t t = 0; t < tops.size(); ++t) {
        Section s;
        for (const auto& p : coeffs[t]) s.push_back(restrict_poly(p));
        if (!is_zero_vector(s)) induced.structure.bracket_table.emplace(tops[t], std::move(s));
    }
    res.induced = std::move(induced);
    return res;
}

// Primary verdict plus independent formulations of the same statement.
struct CrossCheckedVerdict {
    Verdict verdict;
    std::vector<std::pair<std::string, Verdict>> cross;

    bool agrees() const {
        for (const auto& [name, v] : cross)
            if (v.passed != verdict.passed) return false;
        return true;
    }
};

namespace detail {

inline void check_bundle_map(const NLieAlgebroid& a1, const NLieAlgebroid& a2, const PolyMap& phi,
                             const PolyMatrix& m, std::size_t rows, std::size_t cols) {
    a1.structure.validate();
    a2.structure.validate();
    phi.validate();
    if (a1.arity() != a2.arity()) throw std::invalid_argument("algebroids have different arities");
    if (phi.source_dim != a1.base_dim() || phi.target_dim != a2.base_dim())
        throw std::invalid_argument("base map does not go from the first base to the second");
    if (m.size() != rows || (rows > 0 && m[0].size() != cols))
        throw std::invalid_argument("fiber matrix has shape " + std::to_string(m.size()) + "x" +
                                    std::to_string(m.empty() ? 0 : m[0].size()) + ", expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    for (const auto& row : m)
        for (const auto& p : row)
            if (p.num_vars() != phi.source_dim && !p.is_zero())
                throw std::invalid_argument("fiber matrix entry lives in the wrong ring");
}

// sum_L det(M_{L,K}) phi^*(value_L) for the (n-1)- or n-tuples L of the target frame.
template <class Value>
void accumulate_minors(const PolyMatrix& mat, const MultiIndex& k, std::size_t m1, const Value& value) {
    for (const auto& l : combinations(static_cast<int>(mat.size()), static_cast<int>(k.size()))) {
        SparsePoly d = poly_minor(mat, l.indices(), k.indices(), m1);
        if (!d.is_zero()) value(l, d);
    }
}

// Subbundle of E2 x E1 given by the graph of the fiber map, along the graph of phi.
inline Subbundle graph_subbundle(const BundleMapForward& f, std::size_t r2, std::size_t r1) {
    Subbundle h{graph_submanifold(f.base), {}};
    const std::size_t m2 = f.base.target_dim, mt = h.base.num_vars;
    h.basis = zero_poly_matrix(r2 + r1, r1, mt);
    for (std::size_t k = 0; k < r1; ++k) {
        for (std::size_t l = 0; l < r2; ++l) h.basis[l][k] = poly_embed(f.fiber[l][k] + SparsePoly(f.base.source_dim), mt, m2);
        h.basis[r2 + k][k] = SparsePoly::constant(mt, Rat(1));
    }
    return h;
}

}  // namespace detail

// Primary: rho2 o Phi = phi_* o rho1 and Phi[s1..sn]_1 = [Phi s1..Phi sn]_2 on frame tuples, the
// latter through its local expression
//   sum_L det(F_{L,K}) phi^*[e_L]_2 + sum_i (-1)^(n-i) rho1(e_K without i)(F_{., K_i}).
// Cross-checks: the graph of Phi in E2 x E1 with the second factor twisted by (-1)^(n-1) as a
// subalgebroid along the graph of phi, and the comorphism of the section algebras.
inline CrossCheckedVerdict check_morphism_algebroid(const BundleMapForward& f, const NLieAlgebroid& a1,
                                                    const NLieAlgebroid& a2, const CheckOptions& opt = {}) {
    const std::size_t r1 = static_cast<std::size_t>(a1.rank()), r2 = static_cast<std::size_t>(a2.rank());
    detail::check_bundle_map(a1, a2, f.base, f.fiber, r2, r1);
    const auto& e1 = a1.structure;
    const auto& e2 = a2.structure;
    const std::size_t m1 = e1.num_vars, m2 = e2.num_vars;
    const int n = e1.arity;
    CrossCheckedVerdict out;
    out.verdict = [&]() -> Verdict {
        for (const auto& k : combinations(static_cast<int>(r1), n - 1)) {
            PolyDerivation rho1 = e1.basis_anchor(k.indices());
            std::vector<SparsePoly> lhs(m2, SparsePoly(m1));
            detail::accumulate_minors(f.fiber, k, m1, [&](const MultiIndex& l, const SparsePoly& d) {
                PolyDerivation rho2 = e2.basis_anchor(l.indices());
                for (std::size_t i = 0; i < m2; ++i)
                    if (!rho2.component(i).is_zero()) lhs[i] += d * f.base.pull_back(rho2.component(i));
            });
            for (std::size_t i = 0; i < m2; ++i) {
                SparsePoly rhs = rho1.apply(f.base.components[i] + SparsePoly(m1));
                if (lhs[i] != rhs)
                    return Verdict::fail(Witness{"anchor compatibility", {k.indices()}, "y" + std::to_string(i + 1), {lhs[i] - rhs}});
            }
        }
        for (const auto& k : combinations(static_cast<int>(r1), n)) {
            Section lhs = ModuleMap{f.fiber}.apply(e1.basis_bracket(k.indices()), m1);
            Section rhs = zero_poly_vector(r2, m1);
            detail::accumulate_minors(f.fiber, k, m1, [&](const MultiIndex& l, const SparsePoly& d) {
                Section b = e2.basis_bracket(l.indices());
                for (std::size_t i = 0; i < r2; ++i)
                    if (!b[i].is_zero()) rhs[i] += d * f.base.pull_back(b[i]);
            });
            for (std::size_t i = 0; i < k.size(); ++i) {
                PolyDerivation d = e1.basis_anchor(omit(k.indices(), i));
                if (d.is_zero()) continue;
                int sign = parity_sign(k.size() - (i + 1));
                for (std::size_t l = 0; l < r2; ++l) {
                    SparsePoly t = d.apply(f.fiber[l][static_cast<std::size_t>(k[i])] + SparsePoly(m1));
                    if (sign > 0)
                        rhs[l] += t;
                    else
                        rhs[l] -= t;
                }
            }
            if (lhs != rhs) return Verdict::fail(Witness{"bracket compatibility", {k.indices()}, "", detail::section_diff(lhs, rhs)});
        }
        return Verdict::pass();
    }();

    NLieAlgebroid product{direct_sum(e2, twisted(a1, parity_sign(static_cast<std::size_t>(n - 1))).structure)};
    out.cross.emplace_back("twisted graph subalgebroid",
                           check_subalgebroid(product, detail::graph_subbundle(f, r2, r1), opt).verdict);
    out.cross.emplace_back("section comorphism", check_comorphism(e1, e2, ModuleMap{f.fiber}, pullback_map(f.base), opt));
    return out;
}

// Primary: (i) rho1(Phi^* e_J) is phi-related to rho2(e_J), compared on target coordinates;
// (ii) Phi^*[e_J]_2 = [Phi^* e_J]_1 on frame n-tuples. Cross-check: morphism of section algebras.
inline CrossCheckedVerdict check_comorphism_algebroid(const BundleMapCo& c, const NLieAlgebroid& a2,
                                                      const NLieAlgebroid& a1, const CheckOptions& opt = {}) {
    const std::size_t r1 = static_cast<std::size_t>(a1.rank()), r2 = static_cast<std::size_t>(a2.rank());
    detail::check_bundle_map(a1, a2, c.base, c.pullback, r1, r2);
    const auto& e1 = a1.structure;
    const auto& e2 = a2.structure;
    const std::size_t m1 = e1.num_vars, m2 = e2.num_vars;
    const int n = e1.arity;
    ModuleMap pb{c.pullback};
    CrossCheckedVerdict out;
    out.verdict = [&]() -> Verdict {
        for (const auto& j : combinations(static_cast<int>(r2), n - 1)) {
            std::vector<Section> args;
            for (int l : j) args.push_back(pb.column(static_cast<std::size_t>(l)));
            PolyDerivation rho1 = rinehart_anchor(e1, args);
            PolyDerivation rho2 = e2.basis_anchor(j.indices());
            for (std::size_t i = 0; i < m2; ++i) {
                SparsePoly lhs = rho1.apply(c.base.components[i] + SparsePoly(m1));
                SparsePoly rhs = c.base.pull_back(rho2.component(i));
                if (lhs != rhs)
                    return Verdict::fail(Witness{"anchor relatedness", {j.indices()}, "y" + std::to_string(i + 1), {lhs - rhs}});
            }
        }
        for (const auto& j : combinations(static_cast<int>(r2), n)) {
            Section b = e2.basis_bracket(j.indices());
            for (auto& p : b) p = c.base.pull_back(p);
            Section lhs = pb.apply(b, m1);
            std::vector<Section> args;
            for (int l : j) args.push_back(pb.column(static_cast<std::size_t>(l)));
            Section rhs = rinehart_bracket(e1, args);
            if (lhs != rhs) return Verdict::fail(Witness{"pullback bracket preservation", {j.indices()}, "", detail::section_diff(lhs, rhs)});
        }
        return Verdict::pass();
    }();
    out.cross.emplace_back("section morphism", check_morphism(e2, e1, pb, pullback_map(c.base), opt));
    return out;
}

// Linear n-vector field on the dual bundle, variables (x1..xm, xi1..xin):
//   {xi_1, .., xi_n} = sum_k c_k(x) xi_k          for [e_1..e_n] = sum_k c_k e_k,
//   {xi_K, x_j} = rho(e_K)(x_j)                    xi-slots listed before x-slots,
// and zero whenever two slots are base coordinates.
inline constexpr const char* kDualConvention = "{xi_K, x_j} = rho(e_K)(x_j), fiber slots first";

inline NambuTensor dual_linear_nambu(const NLieAlgebroid& a) {
    const auto& r = a.structure;
    r.validate();
    if (r.rank != r.arity) throw std::invalid_argument("dual Nambu tensor needs rank equal to arity");
    const std::size_t m = r.num_vars, n = static_cast<std::size_t>(r.arity), t = m + n;
    NambuTensor pi{r.arity, t, {}};
    std::vector<int> frame, all;
    for (std::size_t k = 0; k < n; ++k) {
        frame.push_back(static_cast<int>(k));
        all.push_back(static_cast<int>(m + k));
    }
    Section top = r.basis_bracket(frame);
    SparsePoly c(t);
    for (std::size_t k = 0; k < n; ++k)
        if (!top[k].is_zero()) c += poly_embed(top[k], t, 0) * SparsePoly::variable(t, m + k);
    if (!c.is_zero()) pi.components.emplace(MultiIndex(all), c);
    for (const auto& k : combinations(static_cast<int>(n), static_cast<int>(n) - 1)) {
        PolyDerivation d = r.basis_anchor(k.indices());
        for (std::size_t j = 0; j < m; ++j) {
            if (d.component(j).is_zero()) continue;
            std::vector<int> seq;
            for (int i : k) seq.push_back(static_cast<int>(m) + i);
            seq.push_back(static_cast<int>(j));
            auto [idx, sign] = canonical_multiindex(seq);
            SparsePoly v = poly_embed(d.component(j), t, 0);
            pi.components.emplace(idx, sign > 0 ? v : -v);
        }
    }
    return pi;
}

// Dual of a comorphism as a map E1* -> E2* on total spaces: y = phi(x), eta_l = sum_k P_kl(x) xi_k.
inline PolyMap dual_comorphism_map(const BundleMapCo& c, std::size_t r1, std::size_t r2) {
    const std::size_t m1 = c.base.source_dim, s = m1 + r1;
    PolyMap out{s, c.base.target_dim + r2, {}};
    for (const auto& p : c.base.components) out.components.push_back(poly_embed(p + SparsePoly(m1), s, 0));
    for (std::size_t l = 0; l < r2; ++l) {
        SparsePoly eta(s);
        for (std::size_t k = 0; k < r1; ++k)
            if (!c.pullback[k][l].is_zero())
                eta += poly_embed(c.pullback[k][l], s, 0) * SparsePoly::variable(s, m1 + k);
        out.components.push_back(eta);
    }
    return out;
}

// Graph of the dual comorphism of a forward map inside E2* x E1*, variables
// (y, eta, x, xi): y = phi(x) and xi_k = sum_l F_lk(x) eta_l.
inline PolySubmanifold dual_morphism_relation(const BundleMapForward& f, std::size_t r1, std::size_t r2) {
    const std::size_t m1 = f.base.source_dim, m2 = f.base.target_dim;
    const std::size_t off_x = m2 + r2, off_xi = off_x + m1, t = off_xi + r1;
    PolySubmanifold rel{SubmanifoldKind::Graph, t, {}, {}, {}};
    for (std::size_t i = 0; i < m2; ++i) {
        rel.outputs.push_back(static_cast<int>(i));
        rel.images.push_back(poly_embed(f.base.components[i] + SparsePoly(m1), t, off_x));
    }
    for (std::size_t k = 0; k < r1; ++k) {
        SparsePoly xi(t);
        for (std::size_t l = 0; l < r2; ++l)
            if (!f.fiber[l][k].is_zero())
                xi += poly_embed(f.fiber[l][k], t, off_x) * SparsePoly::variable(t, m2 + l);
        rel.outputs.push_back(static_cast<int>(off_xi + k));
        rel.images.push_back(xi);
    }
    return rel;
}

// Annihilator of H over a coordinate subspace N, inside the dual bundle (x, xi).
// Needs a constant frame for H.
inline PolySubmanifold annihilator(const NLieAlgebroid& a, const Subbundle& h) {
    const std::size_t m = a.base_dim(), r = static_cast<std::size_t>(a.rank()), t = m + r;
    if (h.base.kind != SubmanifoldKind::Coordinate) throw std::invalid_argument("annihilator needs a coordinate base");
    RatMatrix rows;
    for (std::size_t c = 0; c < h.size(); ++c) {
        RatVector row(r, Rat(0));
        for (std::size_t k = 0; k < r; ++k) {
            const SparsePoly& p = h.basis[k][c];
            if (!p.is_constant()) throw std::invalid_argument("annihilator needs a constant subbundle frame");
            row[k] = p.constant_term();
        }
        rows.push_back(std::move(row));
    }
    auto piv = rat_rref(rows, r);
    PolySubmanifold out{SubmanifoldKind::Graph, t, {}, {}, {}};
    std::vector<int> vs = h.base.vars;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int j : vs) {
        out.outputs.push_back(j);
        out.images.push_back(SparsePoly(t));
    }
    for (std::size_t k = 0; k < piv.size(); ++k) {
        SparsePoly img(t);
        for (std::size_t j = piv[k] + 1; j < r; ++j)
            if (!rows[k][j].is_zero()) img -= SparsePoly::constant(t, rows[k][j]) * SparsePoly::variable(t, m + j);
        out.outputs.push_back(static_cast<int>(m + piv[k]));
        out.images.push_back(img);
    }
    return out;
}

// Two independent verdicts for the same statement.
struct DualityVerdict {
    Verdict algebroid;
    Verdict nambu;
    bool agrees() const { return algebroid.passed == nambu.passed; }
    bool passed() const { return algebroid.passed && nambu.passed; }
};

inline void require_rank_n(const NLieAlgebroid& a) {
    if (a.rank() != a.arity()) throw std::invalid_argument("duality needs rank equal to arity");
}

inline DualityVerdict check_duality_comorphism(const BundleMapCo& c, const NLieAlgebroid& a2, const NLieAlgebroid& a1,
                                               const CheckOptions& opt = {}) {
    require_rank_n(a1);
    require_rank_n(a2);
    DualityVerdict out;
    out.algebroid = check_comorphism_algebroid(c, a2, a1, opt).verdict;
    PolyMap dual = dual_comorphism_map(c, static_cast<std::size_t>(a1.rank()), static_cast<std::size_t>(a2.rank()));
    out.nambu = check_nambu_map(dual, dual_linear_nambu(a1), dual_linear_nambu(a2), opt);
    return out;
}

inline DualityVerdict check_duality_morphism(const BundleMapForward& f, const NLieAlgebroid& a1, const NLieAlgebroid& a2,
                                             const CheckOptions& opt = {}) {
    require_rank_n(a1);
    require_rank_n(a2);
    DualityVerdict out;
    out.algebroid = check_morphism_algebroid(f, a1, a2, opt).verdict;
    PolySubmanifold rel = dual_morphism_relation(f, static_cast<std::size_t>(a1.rank()), static_cast<std::size_t>(a2.rank()));
    out.nambu = check_nambu_relation(dual_linear_nambu(a1), dual_linear_nambu(a2), rel, opt);
    return out;
}

inline DualityVerdict check_annihilator(const NLieAlgebroid& a, const Subbundle& h, const CheckOptions& opt = {}) {
    require_rank_n(a);
    DualityVerdict out;
    out.algebroid = check_subalgebroid(a, h, opt).verdict;
    out.nambu = check_coisotropic(dual_linear_nambu(a), annihilator(a, h), opt);
    return out;
}

}  // namespace nforge
