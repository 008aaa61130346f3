#include <benchmark/benchmark.h>

#include "chebykit/analytic.hpp"
#include "chebykit/padic.hpp"

using namespace chebykit;

static void BM_SeriesNearTwo(benchmark::State& state) {
    const Complex x(2.8, 0.3);
    const double k = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(series_cheb_pow_near2(x, k));
}
BENCHMARK(BM_SeriesNearTwo)->Arg(1)->Arg(10)->Arg(50);

// left half of the disc, where the sum falls back to GMP floats
static void BM_SeriesCancelling(benchmark::State& state) {
    const Complex x(-1.6, 0.5);
    const double k = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_cheb_pow_near2(x, k));
}
BENCHMARK(BM_SeriesCancelling)->Arg(10)->Arg(50);

static void BM_PadicSeries(benchmark::State& state) {
    const PAdicNumber x = from_rational(Rat(2 + 7 * 12345), 7, state.range(0));
    const PAdicNumber k = from_rational(Rat(3, 5), 7, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(padic_cheb_pow(x, k));
}
BENCHMARK(BM_PadicSeries)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
