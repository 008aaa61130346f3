#include <benchmark/benchmark.h>

#include "chebykit/solver.hpp"
#include "chebykit/unram.hpp"

using namespace chebykit;

static void BM_D4Resolvent(benchmark::State& state) {
    const long t = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(d4_resolvent(-1, Rat(-t), -1, 1));
}
BENCHMARK(BM_D4Resolvent)->Arg(11)->Arg(281);

static void BM_CubicReport(benchmark::State& state) {
    const CubicForm f{Rat(state.range(0)), Rat(17)};
    for (auto _ : state) benchmark::DoNotOptimize(cubic_report(f));
}
BENCHMARK(BM_CubicReport)->Arg(-9)->Arg(36);

BENCHMARK_MAIN();
