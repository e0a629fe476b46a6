#include <benchmark/benchmark.h>

#include "dickman/models.hpp"
#include "dickman/renewal.hpp"
#include "dickman/spacetime.hpp"

using namespace dickman;

static void BM_RenewalDensity(benchmark::State& state) {
    int N = (int)state.range(0);
    InterArrivalLaw law = law_from_harmonic(N);
    for (auto _ : state) {
        std::vector<double> U = renewal_density(law, 1.0, N);
        benchmark::DoNotOptimize(U.back());
    }
}
BENCHMARK(BM_RenewalDensity)->Arg(1024)->Arg(8192)->Arg(65536);

static void BM_ExactTauPmf(benchmark::State& state) {
    InterArrivalLaw law = law_from_harmonic(32);
    for (auto _ : state) {
        TauPmf p = exact_tau_pmf(law, (int)state.range(0), 64);
        benchmark::DoNotOptimize(p.beyond);
    }
}
BENCHMARK(BM_ExactTauPmf)->Arg(4)->Arg(16);

static void BM_SpacetimeDense(benchmark::State& state) {
    SpaceTimeLaw law = spacetime_srw_law(8);
    long n_max = state.range(0);
    for (auto _ : state) {
        SpaceTimeDensity den = spacetime_renewal_density(law, 1.0, n_max);
        benchmark::DoNotOptimize(den.time_marginal.back());
    }
}
BENCHMARK(BM_SpacetimeDense)->Arg(32)->Arg(64);

static void BM_SpacetimeFourierPoint(benchmark::State& state) {
    int N = (int)state.range(0);
    SpaceTimeLaw law = polymer_law(N);
    for (auto _ : state) {
        double v = spacetime_point(law, 1.0, N / 2, 0, 0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SpacetimeFourierPoint)->Arg(256)->Arg(1024);

static void BM_PinningMoment(benchmark::State& state) {
    int N = (int)state.range(0);
    DisorderSpec d = gaussian_disorder();
    double beta = beta_for_theta(d, N, 0.0);
    for (auto _ : state) {
        SecondMoment sm = pinning_second_moment(N / 2, N, beta, d);
        benchmark::DoNotOptimize(sm.value);
    }
}
BENCHMARK(BM_PinningMoment)->Arg(1024)->Arg(8192);
