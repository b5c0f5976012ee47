#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "nambu_forge/nambu_forge.hpp"
#include "oracles.hpp"

using namespace nforge;

namespace {

RatVector e(int k) { return basis_vector(4, k); }

NLieAlgebra bent_v4() {
    NLieAlgebra g = builtin_v4();
    g.table[MultiIndex{0, 1, 2}] = e(2);  // [e1, e2, e3] = e3 instead of e4
    return g;
}

}  // namespace

TEST(NLie, V4SatisfiesFundamentalIdentity) {
    NLieAlgebra g = builtin_v4();
    EXPECT_TRUE(check_fundamental_identity(g).passed);
    EXPECT_TRUE(oracle::fundamental_identity_holds(g));
}

TEST(NLie, RedefinedBracketFailsWithWitness) {
    NLieAlgebra g = bent_v4();
    Verdict v = check_fundamental_identity(g);
    ASSERT_FALSE(v.passed);
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(v.witness->tuples.empty());
    EXPECT_FALSE(oracle::fundamental_identity_holds(g));
}

TEST(NLie, BracketIsSkewInBasisVectors) {
    NLieAlgebra g = builtin_v4();
    EXPECT_EQ(g.basis_bracket(std::vector<int>{1, 0, 2}), RatVector({0, 0, 0, -1}));
    EXPECT_EQ(g.basis_bracket(std::vector<int>{0, 1, 0}), RatVector(4));
    EXPECT_EQ(nlie_bracket(g, {e(0), e(1), e(2)}), e(3));
}

TEST(NLie, BracketIsMultilinear) {
    NLieAlgebra g = builtin_v4();
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        RatVector v(4);
        for (auto& c : v) c = Rat(gen::pick(rng, -3, 3));
        return v;
    };
    for (int t = 0; t < 30; ++t) {
        std::vector<RatVector> args{rnd(), rnd(), rnd()};
        EXPECT_EQ(nlie_bracket(g, args), oracle::bracket(g, args));
    }
}

TEST(NLie, InducedLeibnizBrackets) {
    LeibnizAlgebra l = induced_leibniz(builtin_v4());
    FundamentalElement e12{{MultiIndex{0, 1}, Rat(1)}}, e13{{MultiIndex{0, 2}, Rat(1)}},
        e34{{MultiIndex{2, 3}, Rat(1)}};
    FundamentalElement expected{{MultiIndex{0, 3}, Rat(1)}};
    EXPECT_EQ(leibniz_bracket(l, e12, e13), expected);
    EXPECT_TRUE(leibniz_bracket(l, e12, e34).empty());
    EXPECT_TRUE(check_leibniz_identity(l).passed);
}

TEST(NLie, LeibnizIdentityFollowsFundamentalIdentity) {
    NLieAlgebra g = bent_v4();
    EXPECT_FALSE(check_leibniz_identity(induced_leibniz(g)).passed);
    EXPECT_FALSE(oracle::leibniz_identity_holds(g));
}

TEST(NLie, AdjointRepresentation) {
    NLieAlgebra g = builtin_v4();
    RepTable ad = adjoint_representation(g);
    EXPECT_TRUE(check_representation(g, ad).passed);
    ad.table.begin()->second[0][0] += Rat(1);
    Verdict v = check_representation(g, ad);
    EXPECT_FALSE(v.passed);
    EXPECT_TRUE(v.witness);
}

TEST(NLie, ZeroRepresentationAlwaysPasses) {
    RepTable zero{2, {}};
    EXPECT_TRUE(check_representation(builtin_v4(), zero).passed);
}

TEST(NLie, RejectsMalformedTables) {
    NLieAlgebra g = builtin_v4();
    g.table.emplace(MultiIndex{0, 1}, RatVector(4));
    EXPECT_THROW(check_fundamental_identity(g), std::invalid_argument);
}

TEST(NLieProperty, ThreeDimensionalStructuresAgreeWithOracle) {
    for (const auto& g : gen::fi_passing_3d(10)) EXPECT_TRUE(check_fundamental_identity(g).passed);
}

TEST(NLieProperty, RandomFourDimensionalTablesAgreeWithOracle) {
    std::mt19937_64 rng(gen::kSeed);
    int passing = 0;
    for (int t = 0; t < 60; ++t) {
        NLieAlgebra g = gen::random_4d(rng);
        bool expected = oracle::fundamental_identity_holds(g);
        passing += expected;
        EXPECT_EQ(check_fundamental_identity(g).passed, expected) << "trial " << t;
        EXPECT_EQ(check_leibniz_identity(induced_leibniz(g)).passed, oracle::leibniz_identity_holds(g))
            << "trial " << t;
        EXPECT_EQ(check_representation(g, adjoint_representation(g)).passed, expected) << "trial " << t;
    }
    EXPECT_GT(passing, 0);
    EXPECT_LT(passing, 60);
}
