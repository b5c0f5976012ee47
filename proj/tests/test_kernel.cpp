#include <gtest/gtest.h>

#include <random>

#include "nambu_forge/nambu_forge.hpp"

using namespace nforge;

namespace {

SparsePoly P(const char* s, std::size_t m = 3) { return parse_poly(s, m); }

}  // namespace

TEST(Rat, ParsesIntegersAndFractions) {
    EXPECT_EQ(Rat::parse("3"), Rat(3));
    EXPECT_EQ(Rat::parse("-6/4"), Rat(-3, 2));
    EXPECT_EQ(Rat::parse("-6/4").str(), "-3/2");
    EXPECT_THROW(Rat::parse("1/0"), std::exception);
    EXPECT_THROW(Rat::parse("abc"), std::exception);
}

TEST(MultiIndex, CanonicalSigns) {
    auto a = canonical_multiindex({0, 1, 2});
    EXPECT_EQ(a.sign, 1);
    EXPECT_EQ(a.index, (MultiIndex{0, 1, 2}));
    auto b = canonical_multiindex({1, 0, 2});
    EXPECT_EQ(b.sign, -1);
    EXPECT_EQ(b.index, (MultiIndex{0, 1, 2}));
    EXPECT_EQ(canonical_multiindex({2, 0, 1}).sign, 1);
    EXPECT_EQ(canonical_multiindex({0, 2, 0}).sign, 0);
}

TEST(MultiIndex, CombinationsAreLexicographic) {
    auto c = combinations(4, 2);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c.front(), (MultiIndex{0, 1}));
    EXPECT_EQ(c.back(), (MultiIndex{2, 3}));
    EXPECT_EQ(combinations(3, 0).size(), 1u);
}

TEST(Poly, PartialDerivatives) {
    EXPECT_EQ(poly_partial(P("x1^2*x2"), 0), P("2*x1*x2"));
    EXPECT_EQ(poly_partial(P("x1^2*x2"), 1), P("x1^2"));
    EXPECT_TRUE(poly_partial(P("7"), 2).is_zero());
}

TEST(Poly, Substitution) {
    SparsePoly p = P("x1*x2");
    EXPECT_EQ(poly_substitute(p, {P("x1"), P("2*x3"), P("x2")}), P("2*x1*x3"));
    // x1^2 - x2 vanishes on the parabola (t, t^2).
    SparsePoly q = P("x1^2 - x2", 2);
    SparsePoly t = SparsePoly::variable(1, 0);
    EXPECT_TRUE(poly_substitute(q, {t, t * t}).is_zero());
}

TEST(Poly, ParseErrorsCarryColumn) {
    try {
        parse_poly("x1 + * x2", 3);
        FAIL() << "expected a parse error";
    } catch (const PolyParseError& e) {
        EXPECT_GT(e.column(), 0u);
    }
    EXPECT_THROW(parse_poly("x4", 3), PolyParseError);
}

TEST(Poly, ExactDivision) {
    auto q = exact_divide(P("x1^2 - x2^2"), P("x1 + x2"));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, P("x1 - x2"));
    EXPECT_FALSE(exact_divide(P("x1^2 + 1"), P("x1 + 1")).has_value());
}

TEST(Poly, TermLimitIsEnforced) {
    std::size_t saved = max_terms();
    set_max_terms(10);
    SparsePoly s = P("1 + x1 + x2 + x3");
    EXPECT_THROW(poly_pow(s, 4), TermLimitExceeded);
    set_max_terms(saved);
}

TEST(PolyProperty, RingAxiomsAndPrintRoundTrip) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        SparsePoly a = random_poly(3, 3, rng), b = random_poly(3, 3, rng), c = random_poly(3, 3, rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(parse_poly(a.str(), 3), a) << a;
        // Product rule for every partial derivative.
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(poly_partial(a * b, j), poly_partial(a, j) * b + a * poly_partial(b, j));
    }
}

TEST(Derivation, AppliesAndCommutes) {
    PolyDerivation d(3);
    d.component(0) = P("x2");  // x2 d/dx1
    EXPECT_EQ(d.apply(P("x1*x2")), P("x2^2"));
    EXPECT_TRUE(d.apply(P("5")).is_zero());

    PolyDerivation e = coordinate_derivation(3, 1);  // d/dx2
    PolyDerivation br = commutator(e, d);            // [d2, x2 d1] = d1
    EXPECT_EQ(br.component(0), P("1"));
    EXPECT_TRUE(br.component(1).is_zero());
    EXPECT_TRUE(br.component(2).is_zero());
}

TEST(DerivationProperty, CommutatorActsAsCommutator) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<SparsePoly> ca, cb;
        for (int j = 0; j < 3; ++j) {
            ca.push_back(random_poly(3, 2, rng));
            cb.push_back(random_poly(3, 2, rng));
        }
        PolyDerivation a(ca), b(cb);
        SparsePoly f = random_poly(3, 3, rng);
        EXPECT_EQ(commutator(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
    }
}

TEST(Linalg, SolvesPolynomialSystem) {
    // [[x1, 1], [0, 1]] c = [x1^2 + x2, x2]  ->  c = (x1, x2).
    PolyMatrix m{{P("x1"), P("1")}, {P("0"), P("1")}};
    PolyVector b{P("x1^2 + x2"), P("x2")};
    auto r = solve_poly_system(m, b, 3);
    ASSERT_EQ(r.status, SolveStatus::Solved);
    EXPECT_EQ(r.solution[0], P("x1"));
    EXPECT_EQ(r.solution[1], P("x2"));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Linalg, ReportsInconsistencyAndDegreeBound) {
    PolyMatrix m{{P("1")}, {P("1")}};
    EXPECT_EQ(solve_poly_system(m, {P("1"), P("2")}, 3).status, SolveStatus::NoSolution);
    EXPECT_EQ(solve_poly_system({{P("1")}}, {P("x1^6")}, 3, 4).status, SolveStatus::DegreeBoundExceeded);
    // x1 c = 1 has no polynomial solution.
    EXPECT_EQ(solve_poly_system({{P("x1")}}, {P("1")}, 3).status, SolveStatus::NoSolution);
}

TEST(Linalg, DeterminantAndRank) {
    PolyMatrix m{{P("x1"), P("x2")}, {P("x3"), P("1")}};
    EXPECT_EQ(poly_det(m, 3), P("x1 - x2*x3"));
    PolyMatrix singular{{P("x1"), P("x1*x2")}, {P("1"), P("x2")}};
    EXPECT_EQ(poly_matrix_rank(singular, 3), 1u);
    EXPECT_EQ(rat_det({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}), Rat(-2));
}
