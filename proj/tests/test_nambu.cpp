#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "nambu_forge/nambu_forge.hpp"
#include "oracles.hpp"

using namespace nforge;

namespace {

SparsePoly P(const char* s, std::size_t m = 3) { return parse_poly(s, m); }

NambuTensor tensor(std::size_t m, std::initializer_list<std::pair<MultiIndex, const char*>> cs) {
    NambuTensor t{3, m, {}};
    for (const auto& [k, c] : cs) t.components.emplace(k, P(c, m));
    return t;
}

const NambuTensor top3 = NambuTensor::top(3);
const NambuTensor x1top = tensor(3, {{MultiIndex{0, 1, 2}, "x1"}});

PolyMap stretch() {
    PolyMap phi = PolyMap::identity(3);
    phi.components[2] = P("2*x3");
    return phi;
}

PolyMap linear_map(std::initializer_list<const char*> cs) {
    PolyMap phi{3, 3, {}};
    for (const char* c : cs) phi.components.push_back(P(c));
    return phi;
}

NambuTensor random_tensor(std::mt19937_64& rng, std::size_t m) {
    NambuTensor t{3, m, {}};
    for (const auto& k : combinations(static_cast<int>(m), 3))
        if (gen::pick(rng, 0, 1)) t.components.emplace(k, random_poly(m, 1, rng, 2, 2));
    return t;
}

}  // namespace

TEST(Nambu, BracketOfCanonicalTensor) {
    EXPECT_EQ(nambu_bracket(top3, {P("x1"), P("x2"), P("x3")}), P("1"));
    EXPECT_EQ(nambu_bracket(top3, {P("x1^2"), P("x2"), P("x3")}), P("2*x1"));
    EXPECT_TRUE(nambu_bracket(x1top, {P("x2^2"), P("x2^2"), P("x3")}).is_zero());
}

TEST(Nambu, HamiltonianVectorFields) {
    PolyDerivation x = hamiltonian_vf(top3, {P("x1"), P("x2")});
    EXPECT_EQ(x.component(2), P("1"));
    EXPECT_TRUE(x.component(0).is_zero() && x.component(1).is_zero());
    EXPECT_TRUE(hamiltonian_vf(top3, {P("x1*x3"), P("x1*x3")}).is_zero());
    PolyDerivation y = hamiltonian_vf(x1top, {P("x2"), P("x3")});
    EXPECT_EQ(y.component(0), P("x1"));
    EXPECT_TRUE(y.component(1).is_zero() && y.component(2).is_zero());
}

TEST(Nambu, SharpOfDifferentialsIsHamiltonianField) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        NambuTensor pi = random_tensor(rng, 4);
        SparsePoly f = random_poly(4, 2, rng), g = random_poly(4, 2, rng);
        EXPECT_EQ(nambu_sharp(pi, {gradient(f, 4), gradient(g, 4)}), hamiltonian_vf(pi, {f, g}));
    }
}

TEST(NambuProperty, BracketAgreesWithOracleAndIsSkewAndLeibniz) {
    std::mt19937_64 rng(gen::kSeed);
    for (int t = 0; t < 40; ++t) {
        NambuTensor pi = random_tensor(rng, 4);
        SparsePoly f = random_poly(4, 2, rng), g = random_poly(4, 2, rng), h = random_poly(4, 2, rng),
                   k = random_poly(4, 2, rng);
        SparsePoly b = nambu_bracket(pi, {f, g, h});
        EXPECT_EQ(b, oracle::levi_civita_bracket(pi, {f, g, h}));
        EXPECT_EQ(nambu_bracket(pi, {g, f, h}), -b);
        EXPECT_EQ(nambu_bracket(pi, {f, h, g}), -b);
        EXPECT_EQ(nambu_bracket(pi, {f, g, h * k}), nambu_bracket(pi, {f, g, h}) * k + h * nambu_bracket(pi, {f, g, k}));
    }
}

TEST(NambuProperty, JacobianDeterminantForTopTensor) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        std::vector<SparsePoly> fs{random_poly(3, 3, rng), random_poly(3, 3, rng), random_poly(3, 3, rng)};
        EXPECT_EQ(nambu_bracket(top3, fs), oracle::jacobian_det(fs, 3));
    }
}

TEST(Nambu, FundamentalIdentityExamples) {
    EXPECT_TRUE(check_nambu_fi(top3).passed);
    EXPECT_TRUE(check_nambu_fi(x1top).passed);
    NambuTensor sum = tensor(4, {{MultiIndex{0, 1, 2}, "1"}, {MultiIndex{0, 1, 3}, "1"}});
    EXPECT_TRUE(check_nambu_fi(sum).passed);
    // d2^d3^d4 + x2 d1^d2^d4 is dual to a contact-type form on Q^4, so it is not integrable.
    NambuTensor bad = tensor(4, {{MultiIndex{1, 2, 3}, "1"}, {MultiIndex{0, 1, 3}, "x2"}});
    Verdict v = check_nambu_fi(bad);
    ASSERT_FALSE(v.passed);
    EXPECT_FALSE(v.witness->residual.empty());
    std::vector<SparsePoly> probes;
    for (std::size_t j = 0; j < 4; ++j) probes.push_back(SparsePoly::variable(4, j));
    EXPECT_FALSE(oracle::nambu_fi_holds(bad, probes));
}

TEST(NambuProperty, FundamentalIdentityAgreesWithOracleOnLinearProbes) {
    std::mt19937_64 rng(gen::kSeed + 9);
    std::vector<SparsePoly> probes;
    std::vector<std::pair<std::string, SparsePoly>> named;
    for (std::size_t j = 0; j < 4; ++j) {
        probes.push_back(SparsePoly::variable(4, j));
        named.push_back({"x" + std::to_string(j + 1), probes.back()});
    }
    int passing = 0;
    for (int t = 0; t < 12; ++t) {
        NambuTensor pi = random_tensor(rng, 4);
        bool expected = oracle::nambu_fi_holds(pi, probes);
        passing += expected;
        EXPECT_EQ(check_nambu_fi(pi, named).passed, expected) << "trial " << t;
    }
    EXPECT_GT(passing, 0);
}

TEST(NambuMap, Examples) {
    PolyMap id = PolyMap::identity(3);
    EXPECT_TRUE(check_nambu_map(id, top3, top3).passed);
    EXPECT_FALSE(check_nambu_map(stretch(), top3, top3).passed);
    NambuTensor twice = tensor(3, {{MultiIndex{0, 1, 2}, "2"}});
    EXPECT_TRUE(check_nambu_map(stretch(), top3, twice).passed);
}

TEST(Submanifold, Coisotropy) {
    PolySubmanifold n = PolySubmanifold::coordinate(4, {0, 1, 2});
    NambuTensor p124 = tensor(4, {{MultiIndex{0, 1, 3}, "1"}}), p123 = tensor(4, {{MultiIndex{0, 1, 2}, "1"}});
    EXPECT_TRUE(check_coisotropic(p124, n).passed);
    Verdict v = check_coisotropic(p123, n);
    ASSERT_FALSE(v.passed);
    ASSERT_EQ(v.witness->residual.size(), 1u);
    EXPECT_TRUE(v.witness->residual[0].is_constant());
}

TEST(SubmanifoldProperty, SmallCodimensionIsAlwaysCoisotropic) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        NambuTensor pi = random_tensor(rng, 4);
        EXPECT_TRUE(check_coisotropic(pi, PolySubmanifold::whole(4)).passed);
        EXPECT_TRUE(check_coisotropic(pi, PolySubmanifold::coordinate(4, {gen::pick(rng, 0, 3)})).passed);
    }
}

TEST(Submanifold, NambuSubmanifolds) {
    EXPECT_TRUE(check_nambu_submanifold(top3, PolySubmanifold::whole(3)).passed);
    EXPECT_TRUE(check_nambu_submanifold(x1top, PolySubmanifold::coordinate(3, {0})).passed);
    EXPECT_FALSE(check_nambu_submanifold(top3, PolySubmanifold::coordinate(3, {0})).passed);
}

TEST(Relation, GraphExamples) {
    EXPECT_TRUE(check_nambu_relation(top3, top3, graph_submanifold(PolyMap::identity(3))).passed);
    EXPECT_FALSE(check_nambu_relation(top3, top3, graph_submanifold(stretch())).passed);
    EXPECT_TRUE(check_nambu_relation(top3, top3, PolySubmanifold::coordinate(6, {4})).passed);
}

TEST(RelationProperty, GraphRelationAgreesWithMapCheck) {
    std::vector<NambuTensor> tensors{top3, x1top, tensor(3, {{MultiIndex{0, 1, 2}, "2"}}), tensor(3, {}),
                                     tensor(3, {{MultiIndex{0, 1, 2}, "x1 + x2"}})};
    int passing = 0, total = 0;
    for (const auto& phi : gen::base_maps(3))
        for (const auto& a : tensors)
            for (const auto& b : tensors) {
                bool direct = check_nambu_map(phi.value, a, b).passed;
                passing += direct;
                ++total;
                EXPECT_EQ(check_nambu_relation(a, b, graph_submanifold(phi.value)).passed, direct) << phi.name;
            }
    EXPECT_GT(passing, 0);
    EXPECT_LT(passing, total);
}

TEST(Composition, GraphsOfLinearMapsCompose) {
    PolyMap f = linear_map({"x1 + x2", "x2", "2*x3"}), g = linear_map({"x2", "x1", "x3 - x1"});
    PolyMap gf = linear_map({"x2", "x1 + x2", "2*x3 - x1 - x2"});
    auto c = compose_linear_relations(graph_submanifold(f), 3, 3, graph_submanifold(g), 3);
    ASSERT_TRUE(c.clean);
    ASSERT_TRUE(c.relation);
    EXPECT_EQ(c.relation->codimension(), 3u);
    for (const auto& d : graph_submanifold(gf).defining_functions()) EXPECT_TRUE(c.relation->reduce(d).is_zero()) << d;
}

TEST(Composition, IdentityAndNambuGraphs) {
    PolyMap id = PolyMap::identity(3);
    auto c = compose_linear_relations(graph_submanifold(id), 3, 3, graph_submanifold(id), 3);
    ASSERT_TRUE(c.relation);
    EXPECT_TRUE(check_nambu_relation(top3, top3, *c.relation).passed);

    // stretch: top -> 2 top, then swap: 2 top -> -2 top.
    NambuTensor twice = tensor(3, {{MultiIndex{0, 1, 2}, "2"}}), minus = tensor(3, {{MultiIndex{0, 1, 2}, "-2"}});
    PolyMap swap = linear_map({"x2", "x1", "x3"});
    ASSERT_TRUE(check_nambu_map(stretch(), top3, twice).passed);
    ASSERT_TRUE(check_nambu_map(swap, twice, minus).passed);
    auto s = compose_linear_relations(graph_submanifold(stretch()), 3, 3, graph_submanifold(swap), 3);
    ASSERT_TRUE(s.relation);
    EXPECT_TRUE(check_nambu_relation(top3, minus, *s.relation).passed);
    EXPECT_FALSE(check_nambu_relation(top3, top3, *s.relation).passed);
}

TEST(Composition, DisjointRelationsAreReported) {
    // x1 = 0 in M2 for the first relation, x1 = 1 in M2 for the second.
    PolySubmanifold r1{SubmanifoldKind::Graph, 2, {}, {0}, {SparsePoly(2)}};
    PolySubmanifold r2{SubmanifoldKind::Graph, 2, {}, {1}, {SparsePoly::constant(2, Rat(1))}};
    auto c = compose_linear_relations(r1, 1, 1, r2, 1);
    EXPECT_FALSE(c.relation);
    EXPECT_FALSE(c.reason.empty());
}
