#pragma once

// Seeded generators for the property and acceptance suites. Each case carries a name so that
// a disagreement can be traced back to its construction.

#include <random>
#include <string>
#include <vector>

#include "nambu_forge/nambu_forge.hpp"
#include "oracles.hpp"

namespace gen {

using namespace nforge;

inline std::uint64_t kSeed = 20240611;

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SparsePoly c(std::size_t m, long v) { return SparsePoly::constant(m, Rat(v)); }
inline SparsePoly x(std::size_t m, std::size_t j) { return SparsePoly::variable(m, j); }

// Random arity-3 structures on Q^3 with small integer constants, kept when the oracle
// confirms the fundamental identity.
inline std::vector<NLieAlgebra> fi_passing_3d(std::size_t count, std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed);
    std::vector<NLieAlgebra> out;
    while (out.size() < count) {
        NLieAlgebra g{3, 3, {}};
        RatVector v{Rat(pick(rng, -3, 3)), Rat(pick(rng, -3, 3)), Rat(pick(rng, -3, 3))};
        if (nforge::is_zero_vector(v)) continue;
        g.table.emplace(MultiIndex{0, 1, 2}, v);
        if (oracle::fundamental_identity_holds(g)) out.push_back(std::move(g));
    }
    return out;
}

// Sparse random arity-3 tables on Q^4; roughly half satisfy the identity.
inline NLieAlgebra random_4d(std::mt19937_64& rng) {
    NLieAlgebra g{3, 4, {}};
    for (const auto& k : combinations(4, 3)) {
        if (pick(rng, 0, 1)) continue;
        RatVector v(4, Rat(0));
        v[pick(rng, 0, 3)] = Rat(pick(rng, -2, 2));
        if (!nforge::is_zero_vector(v)) g.table.emplace(k, v);
    }
    return g;
}

// Tangent model with the anchor scaled by s.
inline NLieRinehart scaled_tangent(int n, long s) {
    NLieRinehart r = tangent_model(n);
    for (auto& [k, d] : r.anchor_table) d *= Rat(s);
    return r;
}

// Constant bracket [e1..en] = e1 with zero anchor over Q^n: an n-Lie algebra bundle.
inline NLieRinehart algebra_bundle(int n) {
    NLieRinehart r = zero_rinehart(n, n, static_cast<std::size_t>(n));
    MultiIndex top;
    {
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        top = MultiIndex(all);
    }
    Section s = r.zero_section();
    s[0] = c(static_cast<std::size_t>(n), 1);
    r.bracket_table.emplace(top, s);
    return r;
}

struct NamedStructure {
    std::string name;
    NLieRinehart value;
};

inline std::vector<NamedStructure> structures(int n) {
    return {{"tangent" + std::to_string(n), tangent_model(n)},
            {"zero" + std::to_string(n), zero_rinehart(n, n, static_cast<std::size_t>(n))}};
}

inline std::vector<NamedStructure> algebroids(int n) {
    return {{"tangent" + std::to_string(n), tangent_model(n)},
            {"zero" + std::to_string(n), zero_rinehart(n, n, static_cast<std::size_t>(n))},
            {"tangent" + std::to_string(n) + "x2", scaled_tangent(n, 2)},
            {"bundle" + std::to_string(n), algebra_bundle(n)}};
}

struct NamedAlgebraMap {
    std::string name;
    AlgebraMap value;
};

inline std::vector<NamedAlgebraMap> algebra_maps(std::size_t m) {
    std::vector<NamedAlgebraMap> out;
    out.push_back({"id", AlgebraMap::identity(m)});
    AlgebraMap dbl = AlgebraMap::identity(m);
    dbl.images[0] = c(m, 2) * x(m, 0);
    out.push_back({"x1->2x1", dbl});
    AlgebraMap shear = AlgebraMap::identity(m);
    shear.images[0] = x(m, 0) + x(m, 1);
    out.push_back({"x1->x1+x2", shear});
    AlgebraMap shift = AlgebraMap::identity(m);
    shift.images[1] = x(m, 1) + c(m, 1);
    out.push_back({"x2->x2+1", shift});
    return out;
}

struct NamedMatrix {
    std::string name;
    PolyMatrix value;
};

// Module maps of size d x d over Q[x1..xm]: identity, a triangular family that is often a
// morphism of tangent models, a random constant matrix, and a polynomial shear.
inline std::vector<NamedMatrix> module_matrices(std::size_t d, std::size_t m, std::mt19937_64& rng) {
    std::vector<NamedMatrix> out;
    out.push_back({"identity", identity_poly_matrix(d, m)});
    PolyMatrix tri = zero_poly_matrix(d, d, m);
    tri[0][0] = c(m, 1);
    for (std::size_t r = 1; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
            if (k <= r) tri[r][k] = c(m, pick(rng, -2, 2));
    out.push_back({"triangular", tri});
    PolyMatrix rnd = zero_poly_matrix(d, d, m);
    for (auto& row : rnd)
        for (auto& e : row) e = c(m, pick(rng, -1, 2));
    out.push_back({"random", rnd});
    PolyMatrix shear = identity_poly_matrix(d, m);
    shear[0][1] = x(m, 0);
    out.push_back({"x1-shear", shear});
    return out;
}

struct RinehartCase {
    std::string name;
    NLieRinehart e, f;
    ModuleMap map;
    AlgebraMap psi;
};

// (Psi, psi) pairs between tangent-type and zero structures of arity 2 and 3.
inline std::vector<RinehartCase> rinehart_cases(std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed);
    std::vector<RinehartCase> out;
    for (int n : {2, 3}) {
        auto ss = structures(n);
        auto psis = algebra_maps(static_cast<std::size_t>(n));
        for (const auto& e : ss)
            for (const auto& f : ss)
                for (const auto& psi : psis)
                    for (const auto& m : module_matrices(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng))
                        out.push_back({e.name + "/" + f.name + "/" + psi.name + "/" + m.name, e.value, f.value,
                                       ModuleMap{m.value}, psi.value});
    }
    return out;
}

struct NamedPolyMap {
    std::string name;
    PolyMap value;
};

inline std::vector<NamedPolyMap> base_maps(std::size_t m) {
    std::vector<NamedPolyMap> out;
    PolyMap id{m, m, {}};
    for (std::size_t j = 0; j < m; ++j) id.components.push_back(x(m, j));
    out.push_back({"id", id});
    PolyMap dbl = id;
    dbl.components[0] = c(m, 2) * x(m, 0);
    out.push_back({"2x1", dbl});
    PolyMap swap = id;
    std::swap(swap.components[0], swap.components[1]);
    out.push_back({"swap12", swap});
    PolyMap shear = id;
    shear.components[0] = x(m, 0) + x(m, 1);
    out.push_back({"x1+x2", shear});
    return out;
}

inline std::vector<NamedMatrix> fiber_matrices(std::size_t r, std::size_t m, std::mt19937_64& rng) {
    std::vector<NamedMatrix> out;
    out.push_back({"identity", identity_poly_matrix(r, m)});
    PolyMatrix neg = identity_poly_matrix(r, m);
    for (std::size_t k = 0; k < r; ++k) neg[k][k] = c(m, -1);
    out.push_back({"negation", neg});
    out.push_back({"zero", zero_poly_matrix(r, r, m)});
    PolyMatrix rnd = zero_poly_matrix(r, r, m);
    for (auto& row : rnd)
        for (auto& e : row) e = c(m, pick(rng, -1, 2));
    out.push_back({"random", rnd});
    return out;
}

struct AlgebroidPairs {
    std::string name;
    NLieAlgebroid a1, a2;
};

inline std::vector<AlgebroidPairs> algebroid_pairs(int n) {
    auto as = algebroids(n);
    std::vector<AlgebroidPairs> out;
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < as.size(); ++j)
            if (i == j || i == 0 || j == 0)
                out.push_back({as[i].name + "->" + as[j].name, NLieAlgebroid{as[i].value}, NLieAlgebroid{as[j].value}});
    return out;
}

struct ComorphismCase {
    std::string name;
    BundleMapCo map;
    NLieAlgebroid a2, a1;
};

inline std::vector<ComorphismCase> comorphism_cases(std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed + 1);
    std::vector<ComorphismCase> out;
    for (int n : {2, 3}) {
        const std::size_t m = static_cast<std::size_t>(n);
        for (const auto& pr : algebroid_pairs(n))
            for (const auto& phi : base_maps(m)) {
                auto fibers = fiber_matrices(m, m, rng);
                for (std::size_t k = 0; k < fibers.size(); k += (phi.name == "id" ? 1 : 2))
                    out.push_back({pr.name + "/" + phi.name + "/" + fibers[k].name, BundleMapCo{phi.value, fibers[k].value},
                                   pr.a2, pr.a1});
            }
    }
    return out;
}

struct ForwardCase {
    std::string name;
    BundleMapForward map;
    NLieAlgebroid a1, a2;
};

inline std::vector<ForwardCase> forward_cases(std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed + 2);
    std::vector<ForwardCase> out;
    for (int n : {2, 3}) {
        const std::size_t m = static_cast<std::size_t>(n);
        for (const auto& pr : algebroid_pairs(n))
            for (const auto& phi : base_maps(m)) {
                auto fibers = fiber_matrices(m, m, rng);
                for (std::size_t k = 0; k < fibers.size(); k += (phi.name == "id" ? 1 : 2))
                    out.push_back({pr.name + "/" + phi.name + "/" + fibers[k].name,
                                   BundleMapForward{phi.value, fibers[k].value}, pr.a1, pr.a2});
            }
    }
    return out;
}

struct SubbundleCase {
    std::string name;
    NLieAlgebroid a;
    Subbundle h;
};

inline std::vector<SubbundleCase> subbundle_cases(std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed + 3);
    std::vector<SubbundleCase> out;
    for (int n : {2, 3}) {
        const std::size_t m = static_cast<std::size_t>(n);
        std::vector<std::pair<std::string, PolySubmanifold>> bases{{"M", PolySubmanifold::whole(m)}};
        for (std::size_t j = 0; j < m; ++j)
            bases.push_back({"x" + std::to_string(j + 1) + "=0", PolySubmanifold::coordinate(m, {static_cast<int>(j)})});
        for (const auto& a : algebroids(n))
            for (const auto& [bname, base] : bases) {
                // Spans of the first n-1 frame vectors, of the last n-1, of everything, and a
                // random constant frame of size n-1.
                std::vector<std::pair<std::string, PolyMatrix>> frames;
                PolyMatrix first = zero_poly_matrix(m, m - 1, m), last = zero_poly_matrix(m, m - 1, m);
                for (std::size_t k = 0; k + 1 < m; ++k) {
                    first[k][k] = c(m, 1);
                    last[k + 1][k] = c(m, 1);
                }
                frames.push_back({"first", first});
                frames.push_back({"last", last});
                frames.push_back({"full", identity_poly_matrix(m, m)});
                PolyMatrix rnd = zero_poly_matrix(m, m - 1, m);
                for (auto& row : rnd)
                    for (auto& e : row) e = c(m, pick(rng, -1, 1));
                frames.push_back({"random", rnd});
                for (const auto& [fname, frame] : frames) {
                    if (poly_matrix_rank(frame, m) != frame[0].size()) continue;
                    out.push_back({a.name + "/" + bname + "/" + fname, NLieAlgebroid{a.value}, Subbundle{base, frame}});
                }
            }
    }
    return out;
}

}  // namespace gen
