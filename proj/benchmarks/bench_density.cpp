#include <benchmark/benchmark.h>

#include <cmath>

#include "dickman/density.hpp"

static void BM_DensityGridBuild(benchmark::State& state) {
    double h = std::ldexp(1.0, -(int)state.range(0));
    for (auto _ : state) {
        dickman::DensityGrid g(0.5, h, 8.0);
        benchmark::DoNotOptimize(g.value_at_node(g.nodes()));
    }
}
BENCHMARK(BM_DensityGridBuild)->Arg(10)->Arg(12)->Arg(14);

static void BM_RhoGridBuild(benchmark::State& state) {
    double h = std::ldexp(1.0, -(int)state.range(0));
    for (auto _ : state) {
        dickman::RhoGrid g(h, 12.0);
        benchmark::DoNotOptimize(g.value(12.0));
    }
}
BENCHMARK(BM_RhoGridBuild)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
