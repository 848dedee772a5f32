#include "virg/algebra.hpp"
#include "virg/classical.hpp"
#include "virg/induced.hpp"
#include "virg/parse.hpp"

#include <benchmark/benchmark.h>

using namespace virg;

namespace {

void BM_PolyGcd(benchmark::State& state) {
    const Session s(Group::with_rank(2));
    const Ring& r = s.ring();
    const Poly common = parse_scalar("alpha+g2+g1*beta+3", r).num();
    const Poly a = common * parse_scalar("g1^2-beta*g2+1", r).num();
    const Poly b = common * parse_scalar("alpha^2-g1+2*beta", r).num();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd(a, b));
    }
}
BENCHMARK(BM_PolyGcd);

void BM_Bracket(benchmark::State& state) {
    const Group g = Group::with_rank(static_cast<std::size_t>(state.range(0)));
    const VirasoroAlgebra vir(g);
    std::vector<std::int64_t> cx(g.rank(), 2);
    std::vector<std::int64_t> cy(g.rank(), -2);
    cy[0] = 3;
    const auto x = AlgebraElement::d(GroupElement(cx)) + AlgebraElement::d(GroupElement(cy));
    const auto y = AlgebraElement::d(-GroupElement(cx)) + AlgebraElement::central();
    for (auto _ : state) {
        benchmark::DoNotOptimize(vir.bracket(x, y));
    }
}
BENCHMARK(BM_Bracket)->Arg(1)->Arg(2)->Arg(3);

void BM_VermaSingular(benchmark::State& state) {
    const Session s(Group::with_rank(1));
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_singular(s, level));
    }
}
BENCHMARK(BM_VermaSingular)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_InducedBuild(benchmark::State& state) {
    const auto data = InductionData::with_direction(Session(Group::with_rank(2)), GroupElement({0, 1}));
    const Window w{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximal_quotient_dims(data, w));
    }
}
BENCHMARK(BM_InducedBuild)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
