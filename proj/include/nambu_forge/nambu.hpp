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
#include "nambu_forge/verdict.hpp"

namespace nforge {

// Polynomial n-vector field on Q^m; components[I] is the coefficient of d_I1 ^ .. ^ d_In.
struct NambuTensor {
    int order = 3;
    std::size_t num_vars = 0;
    std::map<MultiIndex, SparsePoly> components;

    void validate() const {
        if (order < 2) throw std::invalid_argument("Nambu tensor order must be at least 2");
        for (const auto& [k, c] : components) {
            if (static_cast<int>(k.size()) != order || (!k.empty() && k.indices().back() >= static_cast<int>(num_vars)))
                throw std::invalid_argument("tensor key " + k.str() + " does not fit the tensor");
            if (c.num_vars() != num_vars && !c.is_zero())
                throw std::invalid_argument("tensor coefficient " + k.str() + " lives in the wrong ring");
        }
    }

    SparsePoly coefficient(std::span<const int> seq) const {
        auto [idx, sign] = canonical_multiindex(seq);
        if (sign == 0) return SparsePoly(num_vars);
        auto it = components.find(idx);
        if (it == components.end()) return SparsePoly(num_vars);
        return sign > 0 ? it->second + SparsePoly(num_vars) : -it->second + SparsePoly(num_vars);
    }

    // d_1 ^ .. ^ d_m on Q^m.
    static NambuTensor top(std::size_t m) {
        NambuTensor t{static_cast<int>(m), m, {}};
        std::vector<int> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
        t.components.emplace(MultiIndex(all), SparsePoly::constant(m, Rat(1)));
        return t;
    }

    friend bool operator==(const NambuTensor&, const NambuTensor&) = default;
};

inline PolyVector gradient(const SparsePoly& f, std::size_t num_vars) {
    PolyVector g;
    g.reserve(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) g.push_back(poly_partial(f, j) + SparsePoly(num_vars));
    return g;
}

// pi(a1, .., an) for one-forms given by coefficient vectors.
inline SparsePoly tensor_pairing(const NambuTensor& pi, const std::vector<const PolyVector*>& forms) {
    const std::size_t m = pi.num_vars;
    SparsePoly out(m);
    for (const auto& [k, c] : pi.components) {
        if (c.is_zero()) continue;
        PolyMatrix sub(forms.size(), PolyVector(forms.size(), SparsePoly(m)));
        bool zero_row = false;
        for (std::size_t r = 0; r < forms.size() && !zero_row; ++r) {
            zero_row = true;
            for (std::size_t l = 0; l < forms.size(); ++l) {
                sub[r][l] = (*forms[r])[static_cast<std::size_t>(k[l])];
                if (!sub[r][l].is_zero()) zero_row = false;
            }
        }
        if (zero_row) continue;
        SparsePoly d = poly_det(sub, m);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

inline SparsePoly nambu_bracket(const NambuTensor& pi, const std::vector<SparsePoly>& fs) {
    pi.validate();
    if (static_cast<int>(fs.size()) != pi.order)
        throw std::invalid_argument("Nambu bracket needs " + std::to_string(pi.order) + " functions");
    std::vector<PolyVector> grads;
    for (const auto& f : fs) {
        if (f.num_vars() != pi.num_vars && !f.is_constant())
            throw std::invalid_argument("function lives in the wrong ring");
        grads.push_back(gradient(f + SparsePoly(pi.num_vars), pi.num_vars));
    }
    std::vector<const PolyVector*> ptrs;
    for (const auto& g : grads) ptrs.push_back(&g);
    return tensor_pairing(pi, ptrs);
}

// <pi#(a1 ^ .. ^ a(n-1)), b> = pi(a1, .., a(n-1), b).
inline PolyDerivation nambu_sharp(const NambuTensor& pi, const std::vector<PolyVector>& forms) {
    if (static_cast<int>(forms.size()) != pi.order - 1)
        throw std::invalid_argument("sharp map needs n-1 one-forms");
    const std::size_t m = pi.num_vars;
    std::vector<const PolyVector*> ptrs;
    for (const auto& a : forms) {
        if (a.size() != m) throw std::invalid_argument("one-form has the wrong length");
        ptrs.push_back(&a);
    }
    ptrs.push_back(nullptr);
    std::vector<SparsePoly> comps;
    for (std::size_t j = 0; j < m; ++j) {
        PolyVector dx = zero_poly_vector(m, m);
        dx[j] = SparsePoly::constant(m, Rat(1));
        ptrs.back() = &dx;
        comps.push_back(tensor_pairing(pi, ptrs));
    }
    return PolyDerivation(std::move(comps));
}

// X_f(g) = {f1, .., f(n-1), g}.
inline PolyDerivation hamiltonian_vf(const NambuTensor& pi, const std::vector<SparsePoly>& fs) {
    pi.validate();
    std::vector<PolyVector> forms;
    for (const auto& f : fs) forms.push_back(gradient(f + SparsePoly(pi.num_vars), pi.num_vars));
    return nambu_sharp(pi, forms);
}

// Variables and monomials up to `max_degree` (quadratic by default).
inline std::vector<std::pair<std::string, SparsePoly>> default_nambu_probes(std::size_t num_vars,
                                                                            unsigned max_degree = 2) {
    return monomial_probes(num_vars, max_degree);
}

// {f1..f(n-1), {g1..gn}} = sum_i {g1.., {f1..f(n-1), gi}, .., gn} for f's and g's drawn from
// the probe set without repetition (both sides are skew in each group).
inline Verdict check_nambu_fi(const NambuTensor& pi, const std::vector<std::pair<std::string, SparsePoly>>& probes,
                              const CheckOptions& opt = {}) {
    pi.validate();
    if (probes.empty()) throw std::invalid_argument("fundamental identity check needs probes");
    const std::size_t m = pi.num_vars;
    const int n = pi.order;
    const int np = static_cast<int>(probes.size());
    std::vector<PolyVector> grads;
    for (const auto& [label, p] : probes) grads.push_back(gradient(p + SparsePoly(m), m));

    auto fsets = combinations(np, n - 1);
    auto gsets = combinations(np, n);
    std::vector<SparsePoly> inner;
    for (const auto& g : gsets) {
        std::vector<const PolyVector*> ptrs;
        for (int i : g) ptrs.push_back(&grads[static_cast<std::size_t>(i)]);
        inner.push_back(tensor_pairing(pi, ptrs));
    }
    std::vector<PolyDerivation> ham;
    std::vector<std::vector<PolyVector>> moved;  // gradient of X_f(probe)
    for (const auto& f : fsets) {
        std::vector<PolyVector> forms;
        for (int i : f) forms.push_back(grads[static_cast<std::size_t>(i)]);
        ham.push_back(nambu_sharp(pi, forms));
        std::vector<PolyVector> row;
        for (const auto& [label, p] : probes) row.push_back(gradient(ham.back().apply(p + SparsePoly(m)), m));
        moved.push_back(std::move(row));
    }

    auto task = [&](std::size_t t) -> std::optional<Witness> {
        std::size_t fi = t / gsets.size(), gi = t % gsets.size();
        const auto& g = gsets[gi];
        SparsePoly lhs = ham[fi].apply(inner[gi]);
        SparsePoly rhs(m);
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<const PolyVector*> ptrs;
            for (std::size_t k = 0; k < g.size(); ++k)
                ptrs.push_back(k == i ? &moved[fi][static_cast<std::size_t>(g[i])] : &grads[static_cast<std::size_t>(g[k])]);
            rhs += tensor_pairing(pi, ptrs);
        }
        if (lhs == rhs) return std::nullopt;
        std::string label;
        for (int i : fsets[fi]) label += (label.empty() ? "f = " : ", ") + probes[static_cast<std::size_t>(i)].first;
        label += "; g = ";
        for (std::size_t k = 0; k < g.size(); ++k) label += (k ? ", " : "") + probes[static_cast<std::size_t>(g[k])].first;
        return Witness{"Nambu fundamental identity", {fsets[fi].indices(), g.indices()}, label, {lhs - rhs}};
    };
    if (auto w = first_failure(fsets.size() * gsets.size(), opt.jobs, task)) return Verdict::fail(std::move(*w));
    Verdict v = Verdict::pass();
    v.notes.push_back("fundamental identity checked on " + std::to_string(probes.size()) + " probe functions (" +
                      std::to_string(fsets.size() * gsets.size()) + " tuples)");
    return v;
}

inline Verdict check_nambu_fi(const NambuTensor& pi, const CheckOptions& opt = {}) {
    return check_nambu_fi(pi, default_nambu_probes(pi.num_vars, opt.probe_degree), opt);
}

// Polynomial map Q^m1 -> Q^m2.
struct PolyMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<SparsePoly> components;

    void validate() const {
        if (components.size() != target_dim) throw std::invalid_argument("map needs one component per target variable");
        for (const auto& c : components)
            if (c.num_vars() != source_dim && !c.is_zero())
                throw std::invalid_argument("map component lives in the wrong ring");
    }
    SparsePoly pull_back(const SparsePoly& f) const {
        if (target_dim == 0) return SparsePoly::constant(source_dim, f.constant_term());
        return poly_substitute(f, components) + SparsePoly(source_dim);
    }
    PolyMatrix jacobian() const {
        PolyMatrix j;
        for (const auto& c : components) j.push_back(gradient(c + SparsePoly(source_dim), source_dim));
        return j;
    }

    static PolyMap identity(std::size_t m) {
        PolyMap p{m, m, {}};
        for (std::size_t j = 0; j < m; ++j) p.components.push_back(SparsePoly::variable(m, j));
        return p;
    }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

// phi_* pi1 = pi2 componentwise: for every target multi-index J,
//   sum_I pi1^I(x) det(d phi_J / d x_I) = pi2^J(phi(x)).
inline Verdict check_nambu_map(const PolyMap& phi, const NambuTensor& pi1, const NambuTensor& pi2,
                               const CheckOptions& opt = {}) {
    phi.validate();
    pi1.validate();
    pi2.validate();
    if (phi.source_dim != pi1.num_vars || phi.target_dim != pi2.num_vars)
        throw std::invalid_argument("map dimensions do not match the tensors");
    if (pi1.order != pi2.order) throw std::invalid_argument("tensors have different orders");
    const std::size_t m1 = pi1.num_vars;
    PolyMatrix jac = phi.jacobian();
    auto targets = combinations(static_cast<int>(pi2.num_vars), pi2.order);
    auto task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& j = targets[t];
        SparsePoly lhs(m1);
        for (const auto& [i, c] : pi1.components) {
            if (c.is_zero()) continue;
            SparsePoly d = poly_minor(jac, j.indices(), i.indices(), m1);
            if (!d.is_zero()) lhs += c * d;
        }
        SparsePoly rhs = phi.pull_back(pi2.coefficient(j.indices()));
        if (lhs == rhs) return std::nullopt;
        return Witness{"pushforward", {j.indices()}, "", {lhs - rhs}};
    };
    if (auto w = first_failure(targets.size(), opt.jobs, task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

enum class SubmanifoldKind { Coordinate, Graph };

// Coordinate subspace {x_j = 0, j in vars}, or graph {x_v = g_v(inputs), v in outputs}
// where each g_v only involves non-output variables.
struct PolySubmanifold {
    SubmanifoldKind kind = SubmanifoldKind::Coordinate;
    std::size_t num_vars = 0;
    std::vector<int> vars;           // coordinate kind
    std::vector<int> outputs;        // graph kind
    std::vector<SparsePoly> images;  // graph kind, one per output

    void validate() const {
        auto check_index = [&](int j) {
            if (j < 0 || j >= static_cast<int>(num_vars)) throw std::invalid_argument("submanifold variable out of range");
        };
        if (kind == SubmanifoldKind::Coordinate) {
            for (int j : vars) check_index(j);
            return;
        }
        if (images.size() != outputs.size()) throw std::invalid_argument("graph needs one image per output variable");
        std::vector<bool> is_out(num_vars, false);
        for (int j : outputs) {
            check_index(j);
            if (is_out[static_cast<std::size_t>(j)]) throw std::invalid_argument("repeated graph output variable");
            is_out[static_cast<std::size_t>(j)] = true;
        }
        for (const auto& g : images) {
            if (g.num_vars() != num_vars && !g.is_constant())
                throw std::invalid_argument("graph image lives in the wrong ring");
            for (std::size_t j = 0; j < num_vars; ++j)
                if (is_out[j] && g.involves(j))
                    throw std::invalid_argument("graph image depends on an output variable");
        }
    }

    std::vector<SparsePoly> defining_functions() const {
        std::vector<SparsePoly> out;
        if (kind == SubmanifoldKind::Coordinate) {
            for (int j : vars) out.push_back(SparsePoly::variable(num_vars, static_cast<std::size_t>(j)));
        } else {
            for (std::size_t k = 0; k < outputs.size(); ++k)
                out.push_back(SparsePoly::variable(num_vars, static_cast<std::size_t>(outputs[k])) - images[k]);
        }
        return out;
    }

    // Normal form modulo the vanishing ideal.
    SparsePoly reduce(const SparsePoly& p) const {
        std::vector<SparsePoly> sub;
        for (std::size_t j = 0; j < num_vars; ++j) sub.push_back(SparsePoly::variable(num_vars, j));
        if (kind == SubmanifoldKind::Coordinate) {
            for (int j : vars) sub[static_cast<std::size_t>(j)] = SparsePoly(num_vars);
        } else {
            for (std::size_t k = 0; k < outputs.size(); ++k) sub[static_cast<std::size_t>(outputs[k])] = images[k] + SparsePoly(num_vars);
        }
        if (num_vars == 0) return p;
        return poly_substitute(p + SparsePoly(num_vars), sub) + SparsePoly(num_vars);
    }

    std::size_t codimension() const {
        if (kind == SubmanifoldKind::Graph) return outputs.size();
        std::vector<int> v = vars;
        std::sort(v.begin(), v.end());
        return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
    }

    static PolySubmanifold whole(std::size_t m) { return {SubmanifoldKind::Coordinate, m, {}, {}, {}}; }
    static PolySubmanifold coordinate(std::size_t m, std::vector<int> vs) {
        return {SubmanifoldKind::Coordinate, m, std::move(vs), {}, {}};
    }

    friend bool operator==(const PolySubmanifold&, const PolySubmanifold&) = default;
};

namespace detail {

// pi# of each (n-1)-tuple of `forms`, applied to every defining function of N and reduced.
inline Verdict tangency(const NambuTensor& pi, const PolySubmanifold& n_sub, const std::vector<PolyVector>& forms,
                        const std::vector<std::string>& form_labels, const std::string& condition,
                        const CheckOptions& opt) {
    auto defs = n_sub.defining_functions();
    auto tuples = combinations(static_cast<int>(forms.size()), pi.order - 1);
    auto task = [&](std::size_t t) -> std::optional<Witness> {
        const auto& k = tuples[t];
        std::vector<PolyVector> sel;
        for (int i : k) sel.push_back(forms[static_cast<std::size_t>(i)]);
        PolyDerivation x = nambu_sharp(pi, sel);
        for (std::size_t h = 0; h < defs.size(); ++h) {
            SparsePoly r = n_sub.reduce(x.apply(defs[h]));
            if (r.is_zero()) continue;
            std::string label;
            for (int i : k) label += (label.empty() ? "" : " ^ ") + form_labels[static_cast<std::size_t>(i)];
            return Witness{condition, {k.indices(), {static_cast<int>(h)}}, label + " on " + defs[h].str(), {r}};
        }
        return std::nullopt;
    };
    if (auto w = first_failure(tuples.size(), opt.jobs, task)) return Verdict::fail(std::move(*w));
    return Verdict::pass();
}

inline void check_sub(const NambuTensor& pi, const PolySubmanifold& n_sub) {
    pi.validate();
    n_sub.validate();
    if (n_sub.num_vars != pi.num_vars) throw std::invalid_argument("submanifold and tensor live on different spaces");
}

}  // namespace detail

// pi#(d h1 ^ .. ^ d h(n-1)) is tangent to N for all defining functions h of N.
inline Verdict check_coisotropic(const NambuTensor& pi, const PolySubmanifold& n_sub, const CheckOptions& opt = {}) {
    detail::check_sub(pi, n_sub);
    std::vector<PolyVector> forms;
    std::vector<std::string> labels;
    for (const auto& h : n_sub.defining_functions()) {
        forms.push_back(gradient(h, pi.num_vars));
        labels.push_back("d(" + h.str() + ")");
    }
    return detail::tangency(pi, n_sub, forms, labels, "coisotropy", opt);
}

// pi#(dx_I) is tangent to N for all (n-1)-tuples of coordinate differentials.
inline Verdict check_nambu_submanifold(const NambuTensor& pi, const PolySubmanifold& n_sub,
                                       const CheckOptions& opt = {}) {
    detail::check_sub(pi, n_sub);
    const std::size_t m = pi.num_vars;
    std::vector<PolyVector> forms;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < m; ++j) {
        PolyVector dx = zero_poly_vector(m, m);
        dx[j] = SparsePoly::constant(m, Rat(1));
        forms.push_back(std::move(dx));
        labels.push_back("dx" + std::to_string(j + 1));
    }
    return detail::tangency(pi, n_sub, forms, labels, "Nambu submanifold tangency", opt);
}

// pi2 (+) (-1)^(n-1) pi1 on M2 x M1, M2 variables first.
inline NambuTensor product_tensor(const NambuTensor& pi2, const NambuTensor& pi1) {
    pi1.validate();
    pi2.validate();
    if (pi1.order != pi2.order) throw std::invalid_argument("tensors have different orders");
    const std::size_t m2 = pi2.num_vars, m = pi2.num_vars + pi1.num_vars;
    NambuTensor out{pi2.order, m, {}};
    for (const auto& [k, c] : pi2.components) out.components.emplace(k, poly_embed(c, m, 0));
    bool negate = (pi1.order - 1) % 2 == 1;
    for (const auto& [k, c] : pi1.components) {
        std::vector<int> shifted;
        for (int i : k) shifted.push_back(i + static_cast<int>(m2));
        SparsePoly e = poly_embed(c, m, m2);
        out.components.emplace(MultiIndex(shifted), negate ? -e : e);
    }
    return out;
}

// Graph {(phi(x), x)} inside M2 x M1.
inline PolySubmanifold graph_submanifold(const PolyMap& phi) {
    phi.validate();
    PolySubmanifold g{SubmanifoldKind::Graph, phi.target_dim + phi.source_dim, {}, {}, {}};
    for (std::size_t i = 0; i < phi.target_dim; ++i) {
        g.outputs.push_back(static_cast<int>(i));
        g.images.push_back(poly_embed(phi.components[i] + SparsePoly(phi.source_dim), g.num_vars, phi.target_dim));
    }
    return g;
}

inline Verdict check_nambu_relation(const NambuTensor& pi1, const NambuTensor& pi2, const PolySubmanifold& rel,
                                    const CheckOptions& opt = {}) {
    NambuTensor prod = product_tensor(pi2, pi1);
    if (rel.num_vars != prod.num_vars)
        throw std::invalid_argument("relation does not live in the product of the two spaces");
    Verdict v = check_coisotropic(prod, rel, opt);
    if (v.witness) v.witness->condition = "relation coisotropy";
    return v;
}

struct CompositionResult {
    bool clean = false;
    std::optional<PolySubmanifold> relation;
    std::string reason;
};

namespace detail {

// Affine defining functions as rows [coefficients..., constant].
inline RatMatrix affine_rows(const PolySubmanifold& s, std::size_t width, std::size_t offset) {
    RatMatrix rows;
    for (const auto& h : s.defining_functions()) {
        if (h.total_degree() > 1) throw std::invalid_argument("relation is not linear: " + h.str());
        RatVector row(width + 1, Rat(0));
        for (const auto& [e, c] : h.terms()) {
            std::size_t j = 0;
            while (j < e.size() && e[j] == 0) ++j;
            if (j == e.size())
                row[width] += c;
            else
                row[offset + j] += c;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

// Composite of R1 in M2 x M1 and R2 in M3 x M2, returned inside M3 x M1. Both relations
// must be cut out by affine functions; the composite is then an affine subspace and the
// clean condition holds whenever it is nonempty.
inline CompositionResult compose_linear_relations(const PolySubmanifold& r1, std::size_t m2, std::size_t m1,
                                                  const PolySubmanifold& r2, std::size_t m3) {
    r1.validate();
    r2.validate();
    if (r1.num_vars != m2 + m1 || r2.num_vars != m3 + m2)
        throw std::invalid_argument("relation dimensions do not match the spaces");
    // Columns: y (M2) first so that RREF eliminates it, then z (M3), then x (M1), then constant.
    const std::size_t width = m2 + m3 + m1;
    RatMatrix rows;
    for (auto& row : detail::affine_rows(r2, m3 + m2, 0)) {
        RatVector r(width + 1, Rat(0));
        for (std::size_t j = 0; j < m3; ++j) r[m2 + j] = row[j];
        for (std::size_t j = 0; j < m2; ++j) r[j] = row[m3 + j];
        r[width] = row[m3 + m2];
        rows.push_back(std::move(r));
    }
    for (auto& row : detail::affine_rows(r1, m2 + m1, 0)) {
        RatVector r(width + 1, Rat(0));
        for (std::size_t j = 0; j < m2; ++j) r[j] = row[j];
        for (std::size_t j = 0; j < m1; ++j) r[m2 + m3 + j] = row[m2 + j];
        r[width] = row[m2 + m1];
        rows.push_back(std::move(r));
    }
    auto pivots = rat_rref(rows, width + 1);
    RatMatrix projected;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == width) return {false, std::nullopt, "composition is empty"};
        if (pivots[k] >= m2) projected.push_back(RatVector(rows[k].begin() + static_cast<long>(m2), rows[k].end()));
    }
    // Projected equations over (z, x) = variables of M3 x M1.
    const std::size_t mz = m3 + m1;
    auto piv = rat_rref(projected, mz);
    PolySubmanifold out{SubmanifoldKind::Graph, mz, {}, {}, {}};
    for (std::size_t k = 0; k < piv.size(); ++k) {
        SparsePoly img = SparsePoly::constant(mz, -projected[k][mz]);
        for (std::size_t j = piv[k] + 1; j < mz; ++j)
            if (!projected[k][j].is_zero()) img -= SparsePoly::constant(mz, projected[k][j]) * SparsePoly::variable(mz, j);
        out.outputs.push_back(static_cast<int>(piv[k]));
        out.images.push_back(img + SparsePoly(mz));
    }
    return {true, out, ""};
}

}  // namespace nforge
