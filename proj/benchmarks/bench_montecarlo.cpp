#include <benchmark/benchmark.h>

#include "dickman/montecarlo.hpp"
#include "dickman/renewal.hpp"

using namespace dickman;

static void BM_SampleDickman(benchmark::State& state) {
    SimulationConfig cfg;
    cfg.seed = 1;
    cfg.samples = 10000;
    cfg.epsilon = 1e-4;
    cfg.s = 1.0;
    int threads = (int)state.range(0);
    for (auto _ : state) {
        std::vector<DickmanSample> xs = sample_dickman(cfg, threads);
        benchmark::DoNotOptimize(xs.back().y);
    }
    state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SampleDickman)->Arg(1)->Arg(4)->UseRealTime();

static void BM_RenewalPaths(benchmark::State& state) {
    InterArrivalLaw law = law_from_harmonic(1 << 16);
    SimulationConfig cfg;
    cfg.seed = 1;
    cfg.samples = 2000;
    for (auto _ : state) {
        TauEndpoints te = sample_renewal_path(law, 11, cfg, 1);
        benchmark::DoNotOptimize(te.tau.back());
    }
    state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_RenewalPaths);

static void BM_SpacetimePaths(benchmark::State& state) {
    InterArrivalLaw law = law_from_harmonic(1 << 12);
    SimulationConfig cfg;
    cfg.seed = 1;
    cfg.samples = 2000;
    for (auto _ : state) {
        SpacetimeEndpoints se = sample_srw_renewal_path(law, 8, cfg, 1);
        benchmark::DoNotOptimize(se.x1.back());
    }
    state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SpacetimePaths);
