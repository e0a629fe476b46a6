#include <benchmark/benchmark.h>

#include "dickman/green.hpp"

using namespace dickman;

static void BM_GreenEvaluatorBuild(benchmark::State& state) {
    for (auto _ : state) {
        GreenEvaluator ev(0.0);
        benchmark::DoNotOptimize(ev.value(0.5));
    }
}
BENCHMARK(BM_GreenEvaluatorBuild);

static void BM_GreenCachedUnit(benchmark::State& state) {
    GreenEvaluator ev(0.0);
    ev.value(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(ev.value(0.437));
}
BENCHMARK(BM_GreenCachedUnit);

static void BM_GreenCachedExtension(benchmark::State& state) {
    GreenEvaluator ev(0.0);
    ev.value(2.437);
    for (auto _ : state) benchmark::DoNotOptimize(ev.value(2.437));
}
BENCHMARK(BM_GreenCachedExtension);

static void BM_GreenSmallT(benchmark::State& state) {
    GreenEvaluator ev(0.0);
    ev.value(1e-6);
    for (auto _ : state) benchmark::DoNotOptimize(ev.value(1.07e-6));
}
BENCHMARK(BM_GreenSmallT);
