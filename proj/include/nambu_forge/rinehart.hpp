#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu_forge/derivation.hpp"
#include "nambu_forge/linalg.hpp"
#include "nambu_forge/multi_index.hpp"
#include "nambu_forge/nlie.hpp"
#include "nambu_forge/verdict.hpp"

namespace nforge {

// Section of a free module: coefficients on the basis e_1..e_d.
using Section = PolyVector;

// n-Lie-Rinehart algebra (A, E) with A = Q[x1..xm] and E free of rank d.
// Absent table keys mean zero.
struct NLieRinehart {
    int arity = 2;
    int rank = 0;
    std::size_t num_vars = 0;
    std::map<MultiIndex, PolyDerivation> anchor_table;  // increasing (n-1)-tuples
    std::map<MultiIndex, Section> bracket_table;        // increasing n-tuples

    void validate() const {
        if (arity < 2) throw std::invalid_argument("arity must be at least 2");
        if (rank < 0) throw std::invalid_argument("negative rank");
        for (const auto& [k, d] : anchor_table) {
            if (static_cast<int>(k.size()) != arity - 1 || (!k.empty() && k.indices().back() >= rank))
                throw std::invalid_argument("anchor key " + k.str() + " does not fit the structure");
            if (d.num_vars() != num_vars)
                throw std::invalid_argument("anchor " + k.str() + " has the wrong number of components");
        }
        for (const auto& [k, s] : bracket_table) {
            if (static_cast<int>(k.size()) != arity || (!k.empty() && k.indices().back() >= rank))
                throw std::invalid_argument("bracket key " + k.str() + " does not fit the structure");
            if (static_cast<int>(s.size()) != rank)
                throw std::invalid_argument("bracket value " + k.str() + " has the wrong length");
            for (const auto& p : s)
                if (p.num_vars() != num_vars && !p.is_zero())
                    throw std::invalid_argument("bracket value " + k.str() + " lives in the wrong ring");
        }
    }

    Section zero_section() const { return zero_poly_vector(static_cast<std::size_t>(rank), num_vars); }

    Section basis_section(int k) const {
        Section s = zero_section();
        s.at(static_cast<std::size_t>(k)) = SparsePoly::constant(num_vars, Rat(1));
        return s;
    }

    PolyDerivation basis_anchor(std::span<const int> seq) const {
        auto [idx, sign] = canonical_multiindex(seq);
        if (sign != 0) {
            auto it = anchor_table.find(idx);
            if (it != anchor_table.end()) return sign > 0 ? it->second : it->second * Rat(-1);
        }
        return PolyDerivation(num_vars);
    }

    Section basis_bracket(std::span<const int> seq) const {
        auto [idx, sign] = canonical_multiindex(seq);
        Section out = zero_section();
        if (sign == 0) return out;
        auto it = bracket_table.find(idx);
        if (it == bracket_table.end()) return out;
        for (std::size_t l = 0; l < out.size(); ++l)
            out[l] = sign > 0 ? it->second[l] + SparsePoly(num_vars) : -it->second[l] + SparsePoly(num_vars);
        return out;
    }

    friend bool operator==(const NLieRinehart&, const NLieRinehart&) = default;
};

inline Section scale_section(const Section& s, const SparsePoly& f) {
    Section out = s;
    for (auto& c : out) c = c * f;
    return out;
}

inline Section& add_scaled(Section& acc, const Section& s, const SparsePoly& f) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!s[i].is_zero()) acc[i] += s[i] * f;
    return acc;
}

inline Section apply_to_section(const PolyDerivation& d, const Section& s) {
    Section out;
    out.reserve(s.size());
    for (const auto& c : s) out.push_back(d.apply(c));
    return out;
}

namespace detail {

inline SparsePoly section_minor(const std::vector<Section>& args, const MultiIndex& cols,
                                std::size_t num_vars) {
    PolyMatrix sub(args.size(), PolyVector(args.size(), SparsePoly(num_vars)));
    for (std::size_t r = 0; r < args.size(); ++r)
        for (std::size_t c = 0; c < args.size(); ++c) sub[r][c] = args[r][static_cast<std::size_t>(cols[c])];
    return poly_det(sub, num_vars);
}

inline void check_sections(const NLieRinehart& r, const std::vector<Section>& args, std::size_t expected) {
    if (args.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " sections, got " +
                                    std::to_string(args.size()));
    for (const auto& s : args)
        if (static_cast<int>(s.size()) != r.rank)
            throw std::invalid_argument("section has " + std::to_string(s.size()) +
                                        " coefficients, the module has rank " + std::to_string(r.rank));
}

}  // namespace detail

// A-multilinear extension of the anchor to arbitrary sections.
inline PolyDerivation rinehart_anchor(const NLieRinehart& r, const std::vector<Section>& args) {
    detail::check_sections(r, args, static_cast<std::size_t>(r.arity - 1));
    PolyDerivation out(r.num_vars);
    for (const auto& [k, d] : r.anchor_table) {
        SparsePoly m = detail::section_minor(args, k, r.num_vars);
        if (!m.is_zero()) out += d * m;
    }
    return out;
}

// Bracket of arbitrary sections. Expanding every slot over the basis and pulling the
// coefficients out with the Leibniz rule in each slot gives
//   [s1..sn] = sum_I det(s restricted to I) [e_I]
//            + sum_i (-1)^(n-i) rho(s1..^si..sn)(si),
// where the anchor acts on the coefficients of si.
inline Section rinehart_bracket(const NLieRinehart& r, const std::vector<Section>& args) {
    detail::check_sections(r, args, static_cast<std::size_t>(r.arity));
    Section out = r.zero_section();
    for (const auto& [k, val] : r.bracket_table) {
        SparsePoly m = detail::section_minor(args, k, r.num_vars);
        if (!m.is_zero()) add_scaled(out, val, m);
    }
    if (r.anchor_table.empty()) return out;
    const std::size_t n = args.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool constant = true;
        for (const auto& c : args[i])
            if (!c.is_constant()) constant = false;
        if (constant) continue;
        std::vector<Section> rest;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(args[j]);
        PolyDerivation d = rinehart_anchor(r, rest);
        if (d.is_zero()) continue;
        Section corr = apply_to_section(d, args[i]);
        int sign = parity_sign(n - (i + 1));
        for (std::size_t l = 0; l < out.size(); ++l) {
            if (sign > 0)
                out[l] += corr[l];
            else
                out[l] -= corr[l];
        }
    }
    return out;
}

inline std::vector<Section> basis_sections(const NLieRinehart& r, std::span<const int> idx) {
    std::vector<Section> out;
    out.reserve(idx.size());
    for (int k : idx) out.push_back(r.basis_section(k));
    return out;
}

namespace detail {

inline Section fi_residual(const NLieRinehart& r, const std::vector<Section>& x,
                           const std::vector<Section>& y) {
    std::vector<Section> outer = x;
    outer.push_back(rinehart_bracket(r, y));
    Section res = rinehart_bracket(r, outer);
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<Section> inner = x;
        inner.push_back(y[i]);
        std::vector<Section> z = y;
        z[i] = rinehart_bracket(r, inner);
        Section t = rinehart_bracket(r, z);
        for (std::size_t l = 0; l < res.size(); ++l) res[l] -= t[l];
    }
    return res;
}

inline std::vector<SparsePoly> derivation_residual(const PolyDerivation& a, const PolyDerivation& b) {
    std::vector<SparsePoly> out;
    for (std::size_t j = 0; j < a.num_vars(); ++j) out.push_back(a.component(j) - b.component(j));
    return out;
}

}  // namespace detail

// Checks an n-Lie-Rinehart structure:
//   1. the anchor is a representation: the commutator identity as derivations on basis tuples,
//      and the bracket identity applied to probe polynomials (generators and, for
//      probe_degree >= 2, quadratic monomials);
//   2. the fundamental identity on basis tuples and on basis tuples with one slot
//      multiplied by a generator x_j.
inline Verdict check_rinehart(const NLieRinehart& r, const CheckOptions& opt = {}) {
    r.validate();
    const int n = r.arity;
    const std::size_t m = r.num_vars;
    auto pairs = combinations(r.rank, n - 1);

    auto commutator_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = pairs[t / pairs.size()];
        const auto& y = pairs[t % pairs.size()];
        PolyDerivation lhs = commutator(r.basis_anchor(x.indices()), r.basis_anchor(y.indices()));
        PolyDerivation rhs(m);
        auto xs = basis_sections(r, x.indices());
        for (std::size_t i = 0; i < y.size(); ++i) {
            auto inner = xs;
            inner.push_back(r.basis_section(y[i]));
            auto ys = basis_sections(r, y.indices());
            ys[i] = rinehart_bracket(r, inner);
            rhs += rinehart_anchor(r, ys);
        }
        if (lhs == rhs) return std::nullopt;
        return Witness{"anchor commutator identity", {x.indices(), y.indices()}, "",
                       detail::derivation_residual(lhs, rhs)};
    };
    if (auto w = first_failure(pairs.size() * pairs.size(), opt.jobs, commutator_task))
        return Verdict::fail(std::move(*w));

    std::vector<std::pair<std::string, SparsePoly>> probes;
    for (auto& p : monomial_probes(m, std::min(2u, std::max(1u, opt.probe_degree)))) probes.push_back(p);
    auto lows = combinations(r.rank, n - 2);
    auto tops = combinations(r.rank, n);
    std::size_t per = tops.size() * probes.size();
    auto bracket_task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& x = lows[t / per];
        const auto& y = tops[(t / probes.size()) % tops.size()];
        const auto& [label, p] = probes[t % probes.size()];
        auto args = basis_sections(r, x.indices());
        args.push_back(rinehart_bracket(r, basis_sections(r, y.indices())));
        SparsePoly lhs = rinehart_anchor(r, args).apply(p);
        SparsePoly rhs(m);
        for (std::size_t i = 0; i < y.size(); ++i) {
            SparsePoly inner = r.basis_anchor(with_appended(x.indices(), y[i])).apply(p);
            if (inner.is_zero()) continue;
            SparsePoly term = r.basis_anchor(omit(y.indices(), i)).apply(inner);
            if (parity_sign(static_cast<std::size_t>(n) - (i + 1)) > 0)
                rhs += term;
            else
                rhs -= term;
        }
        if (lhs == rhs) return std::nullopt;
        return Witness{"anchor bracket identity", {x.indices(), y.indices()}, label, {lhs - rhs}};
    };
    if (!probes.empty()) {
        if (auto w = first_failure(lows.size() * per, opt.jobs, bracket_task))
            return Verdict::fail(std::move(*w));
    }

    auto ys = combinations(r.rank, n);
    std::size_t slots = static_cast<std::size_t>(2 * n - 1);
    std::size_t variants = 1 + slots * m;
    std::size_t fi_pairs = pairs.size() * ys.size();
    auto fi_task = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t variant = t / fi_pairs;
        const auto& x = pairs[(t % fi_pairs) / ys.size()];
        const auto& y = ys[t % ys.size()];
        auto xs = basis_sections(r, x.indices());
        auto yv = basis_sections(r, y.indices());
        std::string probe;
        if (variant > 0) {
            std::size_t slot = (variant - 1) / m, j = (variant - 1) % m;
            SparsePoly g = SparsePoly::variable(m, j);
            Section& target = slot < xs.size() ? xs[slot] : yv[slot - xs.size()];
            target = scale_section(target, g);
            probe = "x" + std::to_string(j + 1) + " in slot " + std::to_string(slot + 1);
        }
        Section res = detail::fi_residual(r, xs, yv);
        if (is_zero_vector(res)) return std::nullopt;
        return Witness{"fundamental identity", {x.indices(), y.indices()}, probe, res};
    };
    std::size_t total = fi_pairs * (m ? variants : 1);
    if (auto w = first_failure(total, opt.jobs, fi_task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// Element of the (n-1)-th exterior power of E, coefficients on increasing (n-1)-tuples.
using WedgeElement = PolyVector;

// Leibniz-Rinehart structure induced on the (n-1)-th exterior power.
// Polynomial coefficients in the left argument are attached to its first factor.
struct LeibnizRinehart {
    NLieRinehart base;
    std::vector<MultiIndex> basis;

    std::size_t size() const { return basis.size(); }
    WedgeElement zero() const { return zero_poly_vector(basis.size(), base.num_vars); }
    WedgeElement unit(std::size_t k) const {
        WedgeElement w = zero();
        w.at(k) = SparsePoly::constant(base.num_vars, Rat(1));
        return w;
    }
    std::size_t position(const MultiIndex& k) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), k);
        if (it == basis.end() || *it != k) throw std::invalid_argument("not a wedge basis element");
        return static_cast<std::size_t>(it - basis.begin());
    }
};

inline LeibnizRinehart induced_leibniz_rinehart(const NLieRinehart& r) {
    r.validate();
    return LeibnizRinehart{r, combinations(r.rank, r.arity - 1)};
}

// Wedge product of n-1 sections in the canonical basis.
inline WedgeElement wedge_sections(const LeibnizRinehart& l, const std::vector<Section>& s) {
    WedgeElement out = l.zero();
    for (std::size_t k = 0; k < l.basis.size(); ++k)
        out[k] = detail::section_minor(s, l.basis[k], l.base.num_vars);
    return out;
}

inline PolyDerivation lr_anchor(const LeibnizRinehart& l, const WedgeElement& x) {
    PolyDerivation out(l.base.num_vars);
    for (std::size_t k = 0; k < l.basis.size(); ++k) {
        if (x[k].is_zero()) continue;
        out += l.base.basis_anchor(l.basis[k].indices()) * x[k];
    }
    return out;
}

// [x, y] = sum_i y1 ^ .. ^ [x1..x(n-1), yi] ^ .. ^ y(n-1), extended over decompositions.
inline WedgeElement lr_bracket(const LeibnizRinehart& l, const WedgeElement& x, const WedgeElement& y) {
    const auto& r = l.base;
    WedgeElement out = l.zero();
    for (std::size_t a = 0; a < l.basis.size(); ++a) {
        if (x[a].is_zero()) continue;
        auto xs = basis_sections(r, l.basis[a].indices());
        if (!xs.empty()) xs[0] = scale_section(xs[0], x[a]);
        for (std::size_t b = 0; b < l.basis.size(); ++b) {
            if (y[b].is_zero()) continue;
            auto ys = basis_sections(r, l.basis[b].indices());
            if (!ys.empty()) ys[0] = scale_section(ys[0], y[b]);
            for (std::size_t i = 0; i < ys.size(); ++i) {
                auto inner = xs;
                inner.push_back(ys[i]);
                auto z = ys;
                z[i] = rinehart_bracket(r, inner);
                WedgeElement w = wedge_sections(l, z);
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += w[k];
            }
        }
    }
    return out;
}

// Checks the Leibniz-Rinehart axioms on basis elements and generators:
//   1. [x,[y,z]] = [[x,y],z] + [y,[x,z]]  (also with z multiplied by a generator)
//   2. anchor([x,y]) = [anchor(x), anchor(y)]
//   3. anchor(a x) = a anchor(x)
//   4. [x, a y] = a [x,y] + anchor(x)(a) y
inline Verdict check_leibniz_rinehart(const LeibnizRinehart& l, const CheckOptions& opt = {}) {
    const std::size_t n = l.size();
    const std::size_t m = l.base.num_vars;
    auto tuple = [&](std::initializer_list<std::size_t> ks) {
        std::vector<std::vector<int>> out;
        for (auto k : ks) out.push_back(l.basis[k].indices());
        return out;
    };
    auto diff = [](const WedgeElement& a, const WedgeElement& b) {
        WedgeElement d = a;
        for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b[k];
        return d;
    };

    auto axiom1 = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t variant = t / (n * n * n);
        std::size_t a = (t / (n * n)) % n, b = (t / n) % n, c = t % n;
        WedgeElement x = l.unit(a), y = l.unit(b), z = l.unit(c);
        std::string probe;
        if (variant > 0) {
            z = scale_section(z, SparsePoly::variable(m, variant - 1));
            probe = "x" + std::to_string(variant) + " on the third argument";
        }
        WedgeElement lhs = lr_bracket(l, x, lr_bracket(l, y, z));
        WedgeElement rhs = lr_bracket(l, lr_bracket(l, x, y), z);
        WedgeElement t2 = lr_bracket(l, y, lr_bracket(l, x, z));
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += t2[k];
        if (lhs == rhs) return std::nullopt;
        return Witness{"Leibniz identity", tuple({a, b, c}), probe, diff(lhs, rhs)};
    };
    auto axiom2 = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t a = t / n, b = t % n;
        PolyDerivation lhs = lr_anchor(l, lr_bracket(l, l.unit(a), l.unit(b)));
        PolyDerivation rhs = commutator(lr_anchor(l, l.unit(a)), lr_anchor(l, l.unit(b)));
        if (lhs == rhs) return std::nullopt;
        return Witness{"anchor morphism", tuple({a, b}), "", detail::derivation_residual(lhs, rhs)};
    };
    auto axiom3 = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t a = t / m, j = t % m;
        SparsePoly g = SparsePoly::variable(m, j);
        PolyDerivation lhs = lr_anchor(l, scale_section(l.unit(a), g));
        PolyDerivation rhs = lr_anchor(l, l.unit(a)) * g;
        if (lhs == rhs) return std::nullopt;
        return Witness{"anchor linearity", tuple({a}), "x" + std::to_string(j + 1),
                       detail::derivation_residual(lhs, rhs)};
    };
    auto axiom4 = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t a = t / (n * m), b = (t / m) % n, j = t % m;
        SparsePoly g = SparsePoly::variable(m, j);
        WedgeElement x = l.unit(a), y = l.unit(b);
        WedgeElement lhs = lr_bracket(l, x, scale_section(y, g));
        WedgeElement rhs = scale_section(lr_bracket(l, x, y), g);
        add_scaled(rhs, y, lr_anchor(l, x).apply(g));
        if (lhs == rhs) return std::nullopt;
        return Witness{"right Leibniz rule", tuple({a, b}), "x" + std::to_string(j + 1), diff(lhs, rhs)};
    };

    if (auto w = first_failure(n * n * n * (1 + m), opt.jobs, axiom1)) return Verdict::fail(std::move(*w));
    if (auto w = first_failure(n * n, opt.jobs, axiom2)) return Verdict::fail(std::move(*w));
    if (auto w = first_failure(n * m, opt.jobs, axiom3)) return Verdict::fail(std::move(*w));
    if (auto w = first_failure(n * n * m, opt.jobs, axiom4)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

// Ideal of Q[x1..xm] generated by a set of coordinates.
struct CoordinateIdeal {
    std::vector<int> vars;  // 0-based, increasing

    std::vector<bool> mask(std::size_t num_vars) const {
        std::vector<bool> z(num_vars, false);
        for (int v : vars) {
            if (v < 0 || static_cast<std::size_t>(v) >= num_vars)
                throw std::invalid_argument("ideal generator outside the variable range");
            z[static_cast<std::size_t>(v)] = true;
        }
        return z;
    }
    SparsePoly reduce(const SparsePoly& p) const { return poly_zero_vars(p, mask(p.num_vars())); }
};

// rho(tuple)(x_j) lies in I for every generator x_j of I.
inline Verdict preserves_ideal(const NLieRinehart& r, const std::vector<Section>& tuple,
                               const CoordinateIdeal& ideal) {
    PolyDerivation d = rinehart_anchor(r, tuple);
    auto mask = ideal.mask(r.num_vars);
    for (int j : ideal.vars) {
        SparsePoly v = poly_zero_vars(d.component(static_cast<std::size_t>(j)), mask);
        if (!v.is_zero()) return Verdict::fail(Witness{"ideal preservation", {}, "x" + std::to_string(j + 1), {v}});
    }
    return Verdict::pass();
}

struct RestrictionResult {
    Verdict verdict;
    std::optional<NLieRinehart> quotient;
};

// Structure induced on E^I / IE^I over A/I, where E^I is spanned by `generators`.
// A/I is presented as the polynomial ring in the variables not in I.
inline RestrictionResult restrict_to_ideal(const NLieRinehart& r, const CoordinateIdeal& ideal,
                                           const std::vector<Section>& generators,
                                           const CheckOptions& opt = {}) {
    r.validate();
    const int n = r.arity;
    const std::size_t k = generators.size();
    auto mask = ideal.mask(r.num_vars);
    std::size_t qvars = 0;
    for (bool b : mask)
        if (!b) ++qvars;
    auto to_quotient = [&](const SparsePoly& p) { return poly_drop_vars(poly_zero_vars(p, mask), mask); };
    auto reduce_section = [&](const Section& s) {
        Section out;
        for (const auto& c : s) out.push_back(to_quotient(c));
        return out;
    };
    auto pick = [&](const MultiIndex& idx) {
        std::vector<Section> s;
        for (int i : idx) s.push_back(generators[static_cast<std::size_t>(i)]);
        return s;
    };
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != r.rank) throw std::invalid_argument("generator has the wrong length");

    RestrictionResult res;
    auto lows = combinations(static_cast<int>(k), n - 1);
    for (const auto& idx : lows) {
        Verdict v = preserves_ideal(r, pick(idx), ideal);
        if (!v.passed) {
            v.witness->tuples = {idx.indices()};
            res.verdict = v;
            return res;
        }
    }

    PolyMatrix gmat = zero_poly_matrix(static_cast<std::size_t>(r.rank), k, qvars);
    for (std::size_t c = 0; c < k; ++c) {
        Section red = reduce_section(generators[c]);
        for (std::size_t row = 0; row < red.size(); ++row) gmat[row][c] = red[row];
    }
    if (poly_matrix_rank(gmat, qvars) != k)
        throw PreconditionError("generators are dependent modulo the ideal");

    NLieRinehart q;
    q.arity = n;
    q.rank = static_cast<int>(k);
    q.num_vars = qvars;
    for (const auto& idx : lows) {
        PolyDerivation d = rinehart_anchor(r, pick(idx));
        std::vector<SparsePoly> comps;
        for (std::size_t j = 0; j < r.num_vars; ++j)
            if (!mask[j]) comps.push_back(to_quotient(d.component(j)));
        PolyDerivation qd(std::move(comps));
        if (!qd.is_zero()) q.anchor_table.emplace(idx, std::move(qd));
    }
    for (const auto& idx : combinations(static_cast<int>(k), n)) {
        Section w = reduce_section(rinehart_bracket(r, pick(idx)));
        if (is_zero_vector(w)) continue;
        SolveResult sol = solve_poly_system(gmat, w, qvars, opt.degree_bound);
        if (sol.status != SolveStatus::Solved) {
            res.verdict = Verdict::fail(Witness{sol.status == SolveStatus::NoSolution
                                                    ? "bracket closure"
                                                    : "bracket closure (degree bound exceeded)",
                                                {idx.indices()}, "", w});
            return res;
        }
        q.bracket_table.emplace(idx, std::move(sol.solution));
    }
    // Spot check that brackets with IE^I stay in IE^I.
    for (const auto& idx : lows) {
        for (int j : ideal.vars) {
            for (std::size_t g = 0; g < k; ++g) {
                auto args = pick(idx);
                args.push_back(scale_section(generators[g], SparsePoly::variable(r.num_vars, static_cast<std::size_t>(j))));
                Section w = rinehart_bracket(r, args);
                for (auto& c : w) c = poly_zero_vars(c, mask);
                if (!is_zero_vector(w)) {
                    res.verdict = Verdict::fail(Witness{"ideal absorption",
                                                        {idx.indices(), {static_cast<int>(g)}},
                                                        "x" + std::to_string(j + 1), w});
                    return res;
                }
            }
        }
    }
    res.verdict = Verdict::pass();
    res.quotient = std::move(q);
    return res;
}

// Direct sum over A (x) B: rank d_E + d_F, variables of A first. Mixed tables vanish and
// each factor's anchor acts on its own variables.
inline NLieRinehart direct_sum(const NLieRinehart& e, const NLieRinehart& f) {
    e.validate();
    f.validate();
    if (e.arity != f.arity) throw std::invalid_argument("direct sum needs equal arities");
    NLieRinehart s;
    s.arity = e.arity;
    s.rank = e.rank + f.rank;
    s.num_vars = e.num_vars + f.num_vars;
    auto shift = [](const MultiIndex& k, int by) {
        std::vector<int> v;
        for (int i : k) v.push_back(i + by);
        return MultiIndex(v);
    };
    auto lift_der = [&](const PolyDerivation& d, std::size_t offset) {
        PolyDerivation out(s.num_vars);
        for (std::size_t j = 0; j < d.num_vars(); ++j)
            out.component(offset + j) = poly_embed(d.component(j), s.num_vars, offset);
        return out;
    };
    auto lift_sec = [&](const Section& v, std::size_t offset, int at) {
        Section out = s.zero_section();
        for (std::size_t l = 0; l < v.size(); ++l)
            out[static_cast<std::size_t>(at) + l] = poly_embed(v[l], s.num_vars, offset);
        return out;
    };
    for (const auto& [k, d] : e.anchor_table) s.anchor_table.emplace(k, lift_der(d, 0));
    for (const auto& [k, d] : f.anchor_table) s.anchor_table.emplace(shift(k, e.rank), lift_der(d, e.num_vars));
    for (const auto& [k, v] : e.bracket_table) s.bracket_table.emplace(k, lift_sec(v, 0, 0));
    for (const auto& [k, v] : f.bracket_table)
        s.bracket_table.emplace(shift(k, e.rank), lift_sec(v, e.num_vars, e.rank));
    return s;
}

// Example model: rank n over Q[x1..xn], zero brackets, anchor (e1..e(n-1)) -> d/dx1.
inline NLieRinehart tangent_model(int n) {
    NLieRinehart r;
    r.arity = n;
    r.rank = n;
    r.num_vars = static_cast<std::size_t>(n);
    std::vector<int> k;
    for (int i = 0; i < n - 1; ++i) k.push_back(i);
    r.anchor_table.emplace(MultiIndex(k), coordinate_derivation(r.num_vars, 0));
    return r;
}

inline NLieRinehart zero_rinehart(int arity, int rank, std::size_t num_vars) {
    NLieRinehart r;
    r.arity = arity;
    r.rank = rank;
    r.num_vars = num_vars;
    return r;
}

// The n-Lie algebra viewed as a structure over Q (no variables, zero anchor).
inline NLieRinehart rinehart_from_nlie(const NLieAlgebra& g) {
    NLieRinehart r = zero_rinehart(g.arity, g.dim, 0);
    for (const auto& [k, v] : g.table) {
        Section s;
        for (const auto& c : v) s.push_back(SparsePoly::constant(0, c));
        r.bracket_table.emplace(k, std::move(s));
    }
    return r;
}

}  // namespace nforge
