#include "virg/algebra.hpp"
#include "virg/error.hpp"
#include "virg/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace virg;

namespace {

GroupElement E(std::vector<std::int64_t> c) { return GroupElement(std::move(c)); }

GroupElement random_index(std::mt19937_64& rng, std::size_t rank, int bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    std::vector<std::int64_t> c(rank);
    for (auto& v : c) {
        v = d(rng);
    }
    return E(c);
}

// Sum of up to three d terms with small symbolic coefficients, sometimes with C.
AlgebraElement random_element(std::mt19937_64& rng, const Group& g) {
    static const char* coeffs[] = {"1", "-2", "alpha", "g1-beta", "1/3*g2", "c+h"};
    AlgebraElement a;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        a += AlgebraElement::d(random_index(rng, g.rank(), 2), parse_scalar(coeffs[rng() % 6], g.ring()));
    }
    if (rng() % 3 == 0) {
        a += AlgebraElement::central(parse_scalar(coeffs[rng() % 6], g.ring()));
    }
    return a;
}

} // namespace

TEST(Algebra, BracketExamples) {
    const Group g = Group::with_rank(2);
    const VirasoroAlgebra vir(g);
    EXPECT_EQ(vir.bracket_basis(E({1, 0}), E({0, 1})).to_string(g.ring()), "(g2-g1)*d[1,1]");
    EXPECT_TRUE(vir.bracket(AlgebraElement::d(E({1, 0})), AlgebraElement::central()).is_zero());
    const AlgebraElement expected =
        AlgebraElement::d(E({0, 0}), parse_scalar("-2*g1", g.ring())) +
        AlgebraElement::central(parse_scalar("(g1^3-g1)/12", g.ring()));
    EXPECT_EQ(vir.bracket_basis(E({1, 0}), E({-1, 0})), expected);
}

TEST(Algebra, CentralTermUsesEmbeddedIndex) {
    const Group g = Group::with_rank(2);
    const VirasoroAlgebra vir(g);
    EXPECT_EQ(vir.central_term(E({2, -1})), parse_scalar("((2*g1-g2)^3-(2*g1-g2))/12", g.ring()));
    EXPECT_TRUE(vir.central_term(E({0, 0})).is_zero());
}

TEST(Algebra, WeightOf) {
    const std::size_t n = 2;
    EXPECT_EQ(std::get<GroupElement>(weight_of(AlgebraElement::d(E({1, 0})), n)), E({1, 0}));
    EXPECT_EQ(std::get<GroupElement>(weight_of(AlgebraElement::central(), n)), E({0, 0}));
    EXPECT_EQ(std::get<GroupElement>(weight_of(AlgebraElement::d(E({0, 0})) + AlgebraElement::central(), n)),
              E({0, 0}));
    EXPECT_TRUE(std::holds_alternative<MixedWeight>(
        weight_of(AlgebraElement::d(E({1, 0})) + AlgebraElement::d(E({0, 1})), n)));
}

TEST(Algebra, ParseRenderRoundTrip) {
    const Group g = Group::with_rank(2);
    for (const char* text : {"d[1,0]", "C", "3*d[1,-1]", "(g2-g1)*d[1,1]+1/12*C", "-d[0,0]+alpha*d[2,3]"}) {
        const AlgebraElement a = parse_algebra_element(text, g, g.ring());
        EXPECT_EQ(parse_algebra_element(a.to_string(g.ring()), g, g.ring()), a) << text;
    }
    EXPECT_THROW(parse_algebra_element("d[1]", g, g.ring()), ParseError);
    EXPECT_THROW(parse_algebra_element("d[1,0", g, g.ring()), ParseError);
    EXPECT_THROW(parse_algebra_element("e[1,0]", g, g.ring()), ParseError);
}

TEST(Algebra, PbwSingleSwap) {
    const Group g = Group::with_rank(2);
    const VirasoroAlgebra vir(g);
    // g1 < g2 in this order.
    const TotalOrder order({E({0, 1}), E({1, 0})});
    const auto out = pbw_normalize(vir, {BasisSymbol::d(E({0, 1})), BasisSymbol::d(E({1, 0}))}, order);
    EnvelopingElement expected;
    expected[EnvelopingMonomial{{E({1, 0}), E({0, 1})}, 0}] = Scalar(1L);
    expected[EnvelopingMonomial{{E({1, 1})}, 0}] = parse_scalar("g1-g2", g.ring());
    EXPECT_EQ(out, expected);

    const auto sorted = pbw_normalize(vir, {BasisSymbol::d(E({1, 0})), BasisSymbol::d(E({1, 0}))}, order);
    ASSERT_EQ(sorted.size(), 1u);
    EXPECT_EQ(sorted.begin()->first.factors, (std::vector<GroupElement>{E({1, 0}), E({1, 0})}));
}

TEST(Algebra, PbwInversePairCarriesCentralCorrection) {
    const Group g = Group::with_rank(1);
    const VirasoroAlgebra vir(g);
    const TotalOrder order = TotalOrder::lexicographic(1);
    // d_{g1} d_{-g1} = d_{-g1} d_{g1} + [d_{g1}, d_{-g1}]
    const auto out = pbw_normalize(vir, {BasisSymbol::d(E({1})), BasisSymbol::d(E({-1}))}, order);
    EnvelopingElement expected;
    expected[EnvelopingMonomial{{E({-1}), E({1})}, 0}] = Scalar(1L);
    expected[EnvelopingMonomial{{E({0})}, 0}] = parse_scalar("-2*g1", g.ring());
    expected[EnvelopingMonomial{{}, 1}] = parse_scalar("(g1^3-g1)/12", g.ring());
    EXPECT_EQ(out, expected);
}

TEST(Algebra, TriangularParts) {
    const Group g = Group::with_rank(2);
    const Splitting s = split(g, E({0, 1}));
    const auto plus = TriangularPart::plus_level(s);
    const auto strict = TriangularPart::strict_plus_level(s);
    EXPECT_TRUE(part_membership(E({0, 1}), strict));
    EXPECT_TRUE(part_membership(E({3, 1}), strict));
    EXPECT_TRUE(part_membership(E({1, 0}), plus));
    EXPECT_FALSE(part_membership(E({1, 0}), strict));
    EXPECT_FALSE(part_membership(E({0, -1}), plus));
    EXPECT_FALSE(part_membership(E({0, -1}), strict));
    EXPECT_TRUE(plus.contains_central());
    EXPECT_FALSE(strict.contains_central());

    const auto pos = TriangularPart::plus(TotalOrder::lexicographic(2));
    const auto neg = TriangularPart::minus(TotalOrder::lexicographic(2));
    EXPECT_TRUE(part_membership(E({0, 1}), pos));
    EXPECT_TRUE(part_membership(E({-1, 5}), neg));
    EXPECT_FALSE(part_membership(E({0, 0}), pos));
    EXPECT_FALSE(part_membership(E({0, 0}), neg));
}

TEST(AlgebraProperties, AntisymmetryAndJacobiOnCombinations) {
    std::mt19937_64 rng(21);
    for (std::size_t n : {2u, 3u}) {
        const Group g = Group::with_rank(n);
        const VirasoroAlgebra vir(g);
        for (int t = 0; t < 40; ++t) {
            const auto a = random_element(rng, g);
            const auto b = random_element(rng, g);
            const auto c = random_element(rng, g);
            EXPECT_EQ(vir.bracket(a, b), -vir.bracket(b, a));
            const auto j = vir.bracket(a, vir.bracket(b, c)) + vir.bracket(b, vir.bracket(c, a)) +
                           vir.bracket(c, vir.bracket(a, b));
            EXPECT_TRUE(j.is_zero()) << j.to_string(g.ring());
        }
    }
}

TEST(AlgebraProperties, BracketRespectsGrading) {
    std::mt19937_64 rng(22);
    const Group g = Group::with_rank(2);
    const VirasoroAlgebra vir(g);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_index(rng, 2, 3);
        const auto y = t % 4 == 0 ? -x : random_index(rng, 2, 3);
        const auto r = vir.bracket_basis(x, y);
        for (const auto& [z, coeff] : r.d_terms()) {
            EXPECT_EQ(z, x + y);
        }
        if (!(x + y).is_zero()) {
            EXPECT_TRUE(r.c_coeff().is_zero());
        }
    }
}

TEST(AlgebraProperties, PbwIsConfluentOnLengthThreeWords) {
    std::mt19937_64 rng(23);
    const Group g = Group::with_rank(2);
    const VirasoroAlgebra vir(g);
    const TotalOrder order = TotalOrder::lexicographic(2);
    for (int t = 0; t < 60; ++t) {
        std::vector<BasisSymbol> word;
        for (int k = 0; k < 3; ++k) {
            if (rng() % 7 == 0) {
                word.push_back(BasisSymbol::c());
            } else {
                word.push_back(BasisSymbol::d(random_index(rng, 2, 1)));
            }
        }
        if (t % 5 == 0 && !word[0].is_central) {
            word[2] = BasisSymbol::d(-word[0].index);
        }
        EXPECT_EQ(pbw_normalize(vir, word, order, RewriteStrategy::leftmost_inversion),
                  pbw_normalize(vir, word, order, RewriteStrategy::rightmost_inversion));
    }
}
