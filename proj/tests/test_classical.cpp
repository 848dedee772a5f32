#include "virg/classical.hpp"
#include "virg/error.hpp"
#include "virg/parse.hpp"

#include <gtest/gtest.h>

using namespace virg;

namespace {

Session verma_session(Binding c = Binding::free(), Binding h = Binding::free()) {
    return Session(Group::with_rank(1), Binding::free(), Binding::free(), std::move(c), std::move(h));
}

Binding Q(long num, long den = 1) { return Binding::rational(Rational(num, den)); }

Scalar S(const Session& s, const char* text) { return parse_scalar(text, s.ring()); }

// Partitions counted by a plain recursion over the largest part.
std::int64_t count_partitions(int n, int max_part) {
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for (int k = 1; k <= std::min(n, max_part); ++k) {
        total += count_partitions(n - k, k);
    }
    return total;
}

void expect_annihilated(const TruncatedVermaModule& m, const VermaVector& v, int level) {
    for (int k = 1; k <= level; ++k) {
        EXPECT_TRUE(m.act(k, v).empty()) << "d_" << k;
    }
}

} // namespace

TEST(Classical, VermaDims) {
    const Session s = verma_session();
    EXPECT_EQ(verma_dims(s, 4), (std::vector<std::int64_t>{1, 1, 2, 3, 5}));
    EXPECT_EQ(verma_dims(s, 8).back(), 22);
    EXPECT_EQ(verma_dims(s, 0), (std::vector<std::int64_t>{1}));
}

TEST(Classical, PartitionEnumerationsAgree) {
    const auto pent = partition_counts(20);
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(pent[static_cast<std::size_t>(n)], count_partitions(n, n));
        EXPECT_EQ(static_cast<std::int64_t>(partitions(n).size()), count_partitions(n, n));
    }
    for (const auto& p : partitions(6)) {
        EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
    }
    EXPECT_EQ(partition_to_string({2, 1}), "d[-2]d[-1]v");
}

TEST(Classical, BracketConventionGivesMinusTwoH) {
    // [d_1, d_{-1}] = (-1 - 1) d_0, so d_1 d_{-1} v = -2 h v.
    const Session s = verma_session();
    const TruncatedVermaModule m(s, 2);
    const auto r = m.act(1, Partition{1});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.begin()->first, Partition{});
    EXPECT_EQ(r.begin()->second, S(s, "-2*h"));
}

TEST(Classical, HighestWeightConditions) {
    const Session s = verma_session();
    const TruncatedVermaModule m(s, 3);
    EXPECT_TRUE(m.act(1, Partition{}).empty());
    EXPECT_TRUE(m.act(3, Partition{}).empty());
    EXPECT_EQ(m.act(0, Partition{}).begin()->second, S(s, "h"));
    EXPECT_EQ(m.act_central(VermaVector{{Partition{2}, Scalar(1L)}}).begin()->second, S(s, "c"));
    EXPECT_EQ(m.weight(3), S(s, "h-3"));
    // d_0 on a level-n vector gives h - n.
    for (int n = 0; n <= 3; ++n) {
        for (const auto& p : m.basis(n)) {
            const auto r = m.act(0, p);
            ASSERT_EQ(r.size(), 1u);
            EXPECT_EQ(r.begin()->second, m.weight(n));
        }
    }
}

TEST(Classical, LevelOneSingularVector) {
    const auto generic = find_singular(verma_session(), 1);
    EXPECT_TRUE(generic.kernel.empty());
    ASSERT_TRUE(generic.raising_condition.has_value());
    const Session s = verma_session();
    EXPECT_EQ(Scalar(*generic.raising_condition), S(s, "-2*h"));

    const Session zero_h = verma_session(Binding::free(), Q(0));
    const auto at_zero = find_singular(zero_h, 1);
    ASSERT_EQ(at_zero.kernel.size(), 1u);
    expect_annihilated(TruncatedVermaModule(zero_h, 1), at_zero.kernel[0], 1);
}

TEST(Classical, LevelTwoConditionMatchesHandMatrix) {
    const Session s = verma_session();
    const auto report = find_singular(s, 2);
    EXPECT_TRUE(report.kernel.empty());
    ASSERT_TRUE(report.raising_condition.has_value());
    // Basis d_{-2} v, d_{-1}^2 v. Rows: d_1 (coefficient of d_{-1} v), d_2 (coefficient of v).
    //   d_1 d_{-2} v = -3 d_{-1} v          d_1 d_{-1}^2 v = (2 - 4h) d_{-1} v
    //   d_2 d_{-2} v = (c/2 - 4h) v         d_2 d_{-1}^2 v = 6h v
    const Scalar det = S(s, "-3") * S(s, "6*h") - S(s, "2-4*h") * S(s, "c/2-4*h");
    EXPECT_EQ(Scalar(*report.raising_condition), det);
    ASSERT_TRUE(report.gram_condition.has_value());
    // The Gram determinant vanishes on the same locus, with the extra level-1 factor.
    EXPECT_EQ(Scalar(*report.gram_condition), S(s, "2*h") * det);
}

TEST(Classical, LevelTwoSingularVectorOnTheLocus) {
    // -10h - c + 2ch - 16h^2 = 0 at h = 1, c = 26.
    const Session s = verma_session(Q(26), Q(1));
    const auto report = find_singular(s, 2);
    ASSERT_EQ(report.kernel.size(), 1u);
    expect_annihilated(TruncatedVermaModule(s, 2), report.kernel[0], 2);
    EXPECT_EQ(quotient_dims_after_singular(s, 4), (std::vector<std::int64_t>{1, 1, 1, 2, 3}));
}

TEST(Classical, QuotientDims) {
    const Session h0 = verma_session(Q(1, 2), Q(0));
    EXPECT_EQ(quotient_dims_after_singular(h0, 2)[1], 0);
    EXPECT_EQ(quotient_dims_after_singular(h0, 0), (std::vector<std::int64_t>{1}));
    const Session generic = verma_session(Q(1, 3), Q(2, 7));
    EXPECT_EQ(quotient_dims_after_singular(generic, 5), partition_counts(5));
    EXPECT_EQ(irreducible_dims(generic, 5), partition_counts(5));
    EXPECT_THROW(quotient_dims_after_singular(verma_session(), 2), DomainError);
}

TEST(Classical, IrreducibleQuotients) {
    EXPECT_EQ(irreducible_dims(verma_session(Q(0), Q(0)), 5), (std::vector<std::int64_t>{1, 0, 0, 0, 0, 0}));
    const Session ising = verma_session(Q(1, 2), Q(0));
    EXPECT_EQ(irreducible_dims(ising, 6), (std::vector<std::int64_t>{1, 0, 1, 1, 2, 2, 3}));
    EXPECT_EQ(quotient_dims_after_singular(ising, 6), irreducible_dims(ising, 6));
}

TEST(Classical, RejectsBadInput) {
    EXPECT_THROW(TruncatedVermaModule(Session(Group::with_rank(2)), 2), DomainError);
    EXPECT_THROW(TruncatedVermaModule(verma_session(), -1), DomainError);
    EXPECT_THROW(find_singular(verma_session(), 0), DomainError);
    EXPECT_THROW(TruncatedVermaModule(verma_session(), 2).basis(3), DomainError);
}
