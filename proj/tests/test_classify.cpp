#include "virg/classify.hpp"
#include "virg/error.hpp"

#include <gtest/gtest.h>

using namespace virg;

namespace {

GroupElement E(std::vector<std::int64_t> c) { return GroupElement(std::move(c)); }

Session rank_session(std::size_t n, Binding alpha = Binding::free(), Binding beta = Binding::free()) {
    return Session(Group::with_rank(n), std::move(alpha), std::move(beta));
}

ModuleDescriptor verma_descriptor(bool lowest = false, int L = 6) {
    const Session s(Group::with_rank(1));
    return describe_verma(s, verma_dims(s, L), lowest);
}

ModuleDescriptor induced_descriptor(const GroupElement& b, std::size_t rank = 2, const Window& w = {2, 1, 2}) {
    const auto data = InductionData::with_direction(rank_session(rank), b);
    return describe_induced(data, maximal_quotient_dims(data, w));
}

// b is only determined modulo G0: compare the spans and the class of b.
void expect_same_splitting(const ClassificationReport& r, const Splitting& truth) {
    ASSERT_EQ(r.module_case, ModuleCase::induced_type);
    ASSERT_TRUE(r.detected_b.has_value());
    ASSERT_EQ(r.detected_g0_basis.size(), truth.g0_basis.size());
    for (const auto& g : r.detected_g0_basis) {
        EXPECT_TRUE(coordinates_in_span(truth.g0_basis, g).has_value()) << g.to_string();
    }
    for (const auto& g : truth.g0_basis) {
        EXPECT_TRUE(coordinates_in_span(r.detected_g0_basis, g).has_value()) << g.to_string();
    }
    EXPECT_TRUE(coordinates_in_span(truth.g0_basis, *r.detected_b - truth.b).has_value() ||
                truth.g0_basis.empty());
    const Splitting detected{*r.detected_b, r.detected_g0_basis};
    EXPECT_EQ(std::abs(detected.determinant()), 1);
}

} // namespace

TEST(Classify, UniformBoundedness) {
    const IntermediateSeriesModule v(rank_session(2));
    EXPECT_EQ(is_uniformly_bounded(describe_interseries(v, 2)), BoundedVerdict::yes);
    EXPECT_EQ(is_uniformly_bounded(induced_descriptor(E({0, 1}))), BoundedVerdict::no);

    ModuleDescriptor empty;
    empty.group = Group::with_rank(2);
    EXPECT_EQ(is_uniformly_bounded(empty), BoundedVerdict::inconclusive);

    ModuleDescriptor flat;
    flat.group = Group::with_rank(1);
    for (std::int64_t i = -2; i <= 2; ++i) {
        flat.rows.push_back(DescriptorRow{"alpha", E({i}), 2, std::nullopt});
    }
    EXPECT_EQ(is_uniformly_bounded(flat), BoundedVerdict::yes_window_certified);
    flat.provenance = Provenance::interseries;
    EXPECT_THROW(is_uniformly_bounded(flat), DomainError);
}

TEST(Classify, BoundednessIsWindowIndependentForInterseries) {
    for (const auto& [a, b] : std::vector<std::pair<Binding, Binding>>{
             {Binding::free(), Binding::free()},
             {Binding::element(E({1, 0})), Binding::rational(Rational(0))},
             {Binding::rational(Rational(0)), Binding::rational(Rational(1))}}) {
        const IntermediateSeriesModule v(rank_session(2, a, b));
        for (int radius : {1, 2, 3}) {
            EXPECT_EQ(is_uniformly_bounded(describe_interseries(v, radius)), BoundedVerdict::yes);
        }
    }
}

TEST(Classify, StringProfiles) {
    const auto verma = verma_descriptor();
    const auto& top = verma.rows.front();
    EXPECT_EQ(string_profile(verma, E({1}), top), StringProfile::positively_truncated);
    EXPECT_EQ(string_profile(verma, E({-1}), top), StringProfile::negatively_truncated);

    const IntermediateSeriesModule v(rank_session(2));
    const auto inter = describe_interseries(v, 2);
    EXPECT_EQ(string_profile(inter, E({1, 0}), inter.rows.front()), StringProfile::bounded);

    ModuleDescriptor finite;
    finite.group = Group::with_rank(1);
    for (std::int64_t i = -3; i <= 3; ++i) {
        finite.rows.push_back(DescriptorRow{"0", E({i}), std::abs(i) <= 1 ? 1 + std::abs(i) : 0, std::nullopt});
    }
    EXPECT_EQ(string_profile(finite, E({1}), finite.rows[3]), StringProfile::bounded);

    ModuleDescriptor growing;
    growing.group = Group::with_rank(1);
    for (std::int64_t i = -2; i <= 2; ++i) {
        growing.rows.push_back(DescriptorRow{"0", E({i}), 3 + i, std::nullopt});
    }
    EXPECT_EQ(string_profile(growing, E({1}), growing.rows[0]), StringProfile::mixed);

    ModuleDescriptor tiny;
    tiny.group = Group::with_rank(1);
    tiny.rows = {DescriptorRow{"0", E({0}), 1, std::nullopt}, DescriptorRow{"0", E({1}), 1, std::nullopt}};
    EXPECT_THROW(string_profile(tiny, E({1}), tiny.rows[0]), DomainError);
}

TEST(Classify, IntermediateSeriesRoundTrip) {
    for (const auto& [a, b] : std::vector<std::pair<Binding, Binding>>{
             {Binding::free(), Binding::free()},
             {Binding::element(E({1, 0})), Binding::rational(Rational(1))},
             {Binding::rational(Rational(0)), Binding::rational(Rational(0))}}) {
        for (std::size_t n : {2u, 3u}) {
            const IntermediateSeriesModule v =
                n == 2 ? IntermediateSeriesModule(rank_session(n, a, b)) : IntermediateSeriesModule(rank_session(n));
            EXPECT_EQ(classify(describe_interseries(v, 2)).module_case, ModuleCase::intermediate_series);
        }
    }
}

TEST(Classify, RankOneCases) {
    EXPECT_EQ(classify(verma_descriptor()).module_case, ModuleCase::highest_weight);
    EXPECT_EQ(classify(verma_descriptor(true)).module_case, ModuleCase::lowest_weight);

    const Session trivial(Group::with_rank(1), Binding::free(), Binding::free(), Binding::rational(Rational(0)),
                          Binding::rational(Rational(0)));
    EXPECT_EQ(classify(describe_verma(trivial, irreducible_dims(trivial, 5))).module_case, ModuleCase::trivial);

    const IntermediateSeriesModule v(rank_session(1));
    EXPECT_EQ(classify(describe_interseries(v, 3)).module_case, ModuleCase::intermediate_series);
}

TEST(Classify, FlagsRouteRankOne) {
    auto d = verma_descriptor();
    d.flags.is_Z = false;
    d.flags.rank1_not_Z = true;
    EXPECT_EQ(classify(d).module_case, ModuleCase::intermediate_series);
    d.flags.rank1_not_Z = false;
    d.flags.infinitely_generated_rank1 = true;
    EXPECT_EQ(classify(d).module_case, ModuleCase::intermediate_series);

    auto bad = induced_descriptor(E({0, 1}));
    bad.flags.is_Z = true;
    EXPECT_THROW(classify(bad), DomainError);
}

TEST(Classify, InducedRoundTrip) {
    const Group g2 = Group::with_rank(2);
    for (const auto& b : {E({0, 1}), E({1, 0}), E({1, 1}), E({1, 2}), E({-1, 0}), E({2, -1})}) {
        const auto r = classify(induced_descriptor(b));
        expect_same_splitting(r, split(g2, b));
    }
    const auto r3 = classify(induced_descriptor(E({0, 0, 1}), 3, Window{1, 1, 1}));
    expect_same_splitting(r3, split(Group::with_rank(3), E({0, 0, 1})));
}

TEST(Classify, InducedWithReducibleTop) {
    const auto data = InductionData::with_direction(
        rank_session(2, Binding::rational(Rational(0)), Binding::rational(Rational(1))), E({0, 1}));
    const auto d = describe_induced(data, maximal_quotient_dims(data, Window{2, 1, 2}));
    expect_same_splitting(classify(d), data.split);
}

TEST(Classify, DescriptorValidation) {
    ModuleDescriptor d;
    d.group = Group::with_rank(2);
    d.rows = {DescriptorRow{"0", E({1}), 1, std::nullopt}};
    EXPECT_THROW(d.validate(), DomainError);
    d.rows = {DescriptorRow{"0", E({1, 0}), -1, std::nullopt}};
    EXPECT_THROW(d.validate(), DomainError);
    d.rows = {DescriptorRow{"iota[1,0]", E({0, 0}), 1, std::nullopt},
              DescriptorRow{"0", E({1, 0}), 1, std::nullopt}};
    EXPECT_THROW(d.validate(), DomainError);
    EXPECT_EQ(parse_provenance("verma"), Provenance::verma);
    EXPECT_THROW(parse_provenance("paper"), ParseError);
}

TEST(Classify, UnrelatedDataIsInconclusive) {
    ModuleDescriptor d;
    d.group = Group::with_rank(2);
    for (std::int64_t i = -2; i <= 2; ++i) {
        for (std::int64_t j = -2; j <= 2; ++j) {
            d.rows.push_back(DescriptorRow{"alpha", E({i, j}), 1 + std::abs(i + j), std::nullopt});
        }
    }
    EXPECT_EQ(classify(d).module_case, ModuleCase::inconclusive);
}
