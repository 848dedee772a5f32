#include "virg/error.hpp"
#include "virg/linalg.hpp"
#include "virg/parse.hpp"
#include "virg/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace virg;

namespace {

const Ring& ring() {
    static const Ring r = Ring::standard({"g1", "g2"});
    return r;
}

Scalar S(const char* text) { return parse_scalar(text, ring()); }

// Random polynomial with small integer coefficients in up to four slots.
Poly random_poly(std::mt19937_64& rng, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    const std::size_t slots[] = {0, 1, 2, 3};
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (auto s : slots) {
            m.exp[s] = static_cast<std::uint16_t>(exp(rng) * (rng() % 2));
        }
        terms.push_back(Term{m, Rational(coeff(rng))});
    }
    return Poly::from_terms(std::move(terms));
}

Scalar random_scalar(std::mt19937_64& rng) {
    Poly den;
    while (den.is_zero()) {
        den = random_poly(rng, 3, 2);
    }
    return Scalar(random_poly(rng, 3, 2), den);
}

} // namespace

TEST(Scalars, MonomialProduct) {
    EXPECT_EQ(S("g1") * S("g1"), S("g1^2"));
    EXPECT_EQ((S("g1") * S("g1")).to_string(ring()), "g1^2");
}

TEST(Scalars, FactorizationCancels) {
    const Scalar q = (S("g1^2") - S("g2^2")) / (S("g1") - S("g2"));
    EXPECT_EQ(q, S("g1+g2"));
    EXPECT_TRUE(q.is_polynomial());
}

TEST(Scalars, Commutativity) {
    EXPECT_TRUE(((S("alpha") + S("beta")) - (S("beta") + S("alpha"))).is_zero());
}

TEST(Scalars, IsZero) {
    EXPECT_TRUE(Scalar(Poly(), Poly(1L)).is_zero());
    const Scalar central = (S("g1^3") - S("g1")) / Scalar(12L);
    EXPECT_FALSE(central.is_zero());
    EXPECT_TRUE(central.specialize(0, Rational(1)).is_zero());
}

TEST(Scalars, Specialize) {
    const std::size_t alpha = *ring().index_of("alpha");
    const std::size_t beta = *ring().index_of("beta");
    EXPECT_EQ((S("alpha") + S("beta")).specialize(beta, Rational(1)), S("alpha+1"));
    EXPECT_THROW((S("alpha+g2") / S("alpha")).specialize(alpha, Rational(0)), SpecializationError);
    EXPECT_EQ((S("g1^3") - S("g1")).specialize(0, Rational(2)), Scalar(6L));
}

TEST(Scalars, DivisionByZeroIsArithmeticError) {
    EXPECT_THROW(Scalar().inv(), ArithmeticError);
    EXPECT_THROW(S("g1") / Scalar(), ArithmeticError);
    EXPECT_THROW(S("g1/(g2-g2)"), ArithmeticError);
}

TEST(Scalars, CanonicalDenominatorIsMonic) {
    const Scalar q = S("(2*g1)/(4*g2+6)");
    EXPECT_EQ(q.den().leading_coeff(), Rational(1));
    EXPECT_EQ(q, S("g1/(2*g2+3)"));
    EXPECT_EQ(q.to_string(ring()), "(1/2*g1)/(3/2+g2)");
}

TEST(Scalars, RenderParseRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Scalar a = random_scalar(rng);
        EXPECT_EQ(parse_scalar(a.to_string(ring()), ring()), a) << a.to_string(ring());
    }
}

TEST(Scalars, RenderingUsesAscendingGrlex) {
    EXPECT_EQ(S("g1*beta+g2+alpha").to_string(ring()), "alpha+g2+g1*beta");
    EXPECT_EQ(S("g2-g1").to_string(ring()), "g2-g1");
    EXPECT_EQ(S("(g1^3-g1)/12").to_string(ring()), "-1/12*g1+1/12*g1^3");
}

TEST(Scalars, ParseErrors) {
    EXPECT_THROW(S("g1 +"), ParseError);
    EXPECT_THROW(S("zeta"), ParseError);
    EXPECT_THROW(S("g1 $ 2"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ArithmeticError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
}

TEST(PolyGcd, KnownFactors) {
    const Poly a = S("(g1+g2)*(g1-alpha)^2*(beta+1)").num();
    const Poly b = S("(g1-alpha)*(beta+1)^2*(g2+3)").num();
    EXPECT_EQ(gcd(a, b), S("(g1-alpha)*(beta+1)").num().monic());
    EXPECT_EQ(gcd(a, Poly()), a.monic());
    EXPECT_EQ(gcd(S("g1^2*g2").num(), S("g1*g2^3+g1^2").num()), S("g1").num());
}

TEST(PolyGcd, RandomProductsRecoverCommonFactor) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const Poly common = random_poly(rng, 3, 2);
        const Poly p = random_poly(rng, 3, 2);
        const Poly q = random_poly(rng, 3, 2);
        if (common.is_zero() || p.is_zero() || q.is_zero()) {
            continue;
        }
        const Poly a = common * p;
        const Poly b = common * q;
        const Poly g = gcd(a, b);
        // The gcd divides both and is divisible by the planted factor.
        EXPECT_TRUE(a.try_div(g).has_value());
        EXPECT_TRUE(b.try_div(g).has_value());
        EXPECT_TRUE(g.try_div(common).has_value());
        // Cofactors are coprime.
        EXPECT_TRUE(gcd(a.exact_div(g), b.exact_div(g)).is_constant());
    }
}

TEST(ScalarProperties, FieldAxiomsOnRandomTriples) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const Scalar a = random_scalar(rng);
        const Scalar b = random_scalar(rng);
        const Scalar c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inv()).is_one());
        }
    }
}

TEST(ScalarProperties, NormalizationIsIdempotentAndCanonical) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const Scalar a = random_scalar(rng);
        // Re-normalizing stored parts changes nothing.
        EXPECT_EQ(Scalar(a.num(), a.den()), a);
        // The same fraction scaled by an arbitrary nonzero polynomial is stored identically.
        Poly k = random_poly(rng, 2, 2);
        if (k.is_zero()) {
            continue;
        }
        EXPECT_EQ(Scalar(a.num() * k, a.den() * k), a);
    }
}

TEST(Linalg, KernelAndRankOverRationals) {
    Matrix<Rational> m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    EXPECT_EQ(rank_of(m), 1u);
    const auto ker = kernel_basis(m);
    ASSERT_EQ(ker.size(), 2u);
    for (const auto& v : ker) {
        EXPECT_EQ(m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2], 0);
    }
}

TEST(Linalg, BareissMatchesCofactorExpansion) {
    Matrix<Poly> m(3, 3);
    const char* entries[3][3] = {{"g1", "1", "g2"}, {"g2", "g1", "0"}, {"1", "g2", "g1"}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = S(entries[i][j]).num();
        }
    }
    // Cofactor expansion along the first row, written out by hand.
    const Scalar expected = S("g1*(g1*g1 - 0*g2) - 1*(g2*g1 - 0*1) + g2*(g2*g2 - g1*1)");
    EXPECT_EQ(Scalar(bareiss_determinant(m)), expected);
}

TEST(Linalg, RankOverRationalFunctions) {
    Matrix<Scalar> m(2, 2);
    m(0, 0) = S("g1");
    m(0, 1) = S("g2");
    m(1, 0) = S("g1^2");
    m(1, 1) = S("g1*g2");
    EXPECT_EQ(rank_of(m), 1u);
    m(1, 1) = S("g1*g2+1");
    EXPECT_EQ(rank_of(m), 2u);
}
