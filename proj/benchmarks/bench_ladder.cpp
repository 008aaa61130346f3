#include <benchmark/benchmark.h>

#include "chebykit/exactcore.hpp"

using namespace chebykit;

static void BM_LadderResidue(benchmark::State& state) {
    const ResidueElement x(Int("1000000007"), 3);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cheb_pow_ladder(x, n));
}
BENCHMARK(BM_LadderResidue)->RangeMultiplier(100)->Range(100, 100000000);

static void BM_LadderComplex(benchmark::State& state) {
    const Complex x(1.3, 0.4);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cheb_pow_ladder(x, n));
}
BENCHMARK(BM_LadderComplex)->RangeMultiplier(100)->Range(100, 100000000);

static void BM_FirstKindPolynomial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cheb_first_kind(state.range(0)));
}
BENCHMARK(BM_FirstKindPolynomial)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
