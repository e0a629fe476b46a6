#include "dickman/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dickman/stats.hpp"

namespace dickman {

namespace {

constexpr long kChunk = 4096; // samples per RNG stream

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Runs body(stream, global_sample_index) for every sample, chunked so that
// chunk c always sees the same stream regardless of the thread count.
template <class Body>
void run_chunks(std::uint64_t seed, std::uint64_t salt, long samples,
                int threads, const Body& body) {
    long chunks = (samples + kChunk - 1) / kChunk;
    auto run_range = [&](long c0, long c1) {
        for (long c = c0; c < c1; ++c) {
            SplitMix64 g = SplitMix64::stream(seed, salt,
                                              static_cast<std::uint64_t>(c));
            long lo = c * kChunk;
            long hi = std::min(samples, lo + kChunk);
            for (long i = lo; i < hi; ++i) body(g, i);
        }
    };
    if (threads <= 1 || chunks <= 1) {
        run_range(0, chunks);
        return;
    }
    int nt = static_cast<int>(std::min<long>(threads, chunks));
    std::vector<std::thread> pool;
    pool.reserve(nt);
    long per = (chunks + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        long c0 = t * per;
        long c1 = std::min(chunks, c0 + per);
        if (c0 >= c1) break;
        pool.emplace_back(run_range, c0, c1);
    }
    for (auto& th : pool) th.join();
}

inline DickmanSample one_dickman_sample(SplitMix64& g, double s, double eps) {
    double mean = -s * std::log(eps);
    long jumps = poisson_draw(g, mean);
    DickmanSample smp;
    for (long j = 0; j < jumps; ++j) {
        double t = std::pow(eps, g.next_unit());
        smp.y += t;
        smp.m = std::max(smp.m, t);
    }
    return smp;
}

// Sums `n` independent +-1 steps using machine-word popcounts.
inline long long signed_step_sum(SplitMix64& g, long long n) {
    long long heads = 0;
    long long left = n;
    while (left >= 64) {
        heads += std::popcount(g.next_u64());
        left -= 64;
    }
    if (left > 0) {
        std::uint64_t w = g.next_u64() >> (64 - left);
        heads += std::popcount(w);
    }
    return 2 * heads - n;
}

std::vector<double> cumulative_table(const InterArrivalLaw& law) {
    std::vector<double> cum(static_cast<std::size_t>(law.cutoff) + 1, 0.0);
    double run = 0.0;
    for (int m = 1; m <= law.cutoff; ++m) {
        run += law.prob[static_cast<std::size_t>(m)];
        cum[static_cast<std::size_t>(m)] = run;
    }
    cum[static_cast<std::size_t>(law.cutoff)] = 1.0;
    return cum;
}

inline int draw_increment(SplitMix64& g, const std::vector<double>& cum) {
    double u = g.next_unit();
    auto it = std::upper_bound(cum.begin() + 1, cum.end(), u);
    if (it == cum.end()) --it;
    return static_cast<int>(it - cum.begin());
}

} // namespace

void validate(const SimulationConfig& cfg) {
    if (cfg.samples < 1)
        throw std::domain_error("simulation needs at least one sample");
    if (!(cfg.epsilon > 0.0) || !(cfg.epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0, 1)");
    if (!(cfg.s > 0.0) || !std::isfinite(cfg.s))
        throw std::domain_error("subordinator time s must be positive");
}

std::uint64_t SplitMix64::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    return mix64(z);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t salt,
                              std::uint64_t index) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL * (salt + 1));
    return SplitMix64(mix64(h ^ (index + 0xA0761D6478BD642FULL)));
}

long poisson_draw(SplitMix64& g, double mean) {
    if (!(mean >= 0.0) || mean > 700.0)
        throw std::domain_error("poisson_draw: mean must lie in [0, 700]");
    double u = g.next_unit();
    double p = std::exp(-mean);
    double cum = p;
    long k = 0;
    while (u > cum && k < 100000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

std::vector<DickmanSample> sample_dickman(const SimulationConfig& cfg,
                                          int threads) {
    validate(cfg);
    std::vector<DickmanSample> out(static_cast<std::size_t>(cfg.samples));
    run_chunks(cfg.seed, /*salt=*/0, cfg.samples, threads,
               [&](SplitMix64& g, long i) {
                   out[static_cast<std::size_t>(i)] =
                       one_dickman_sample(g, cfg.s, cfg.epsilon);
               });
    return out;
}

ScaleInvarianceReport test_scale_invariance(const SimulationConfig& cfg,
                                            double t, int threads) {
    validate(cfg);
    if (!(t < 1.0) || !(t >= 10.0 * cfg.epsilon))
        throw std::domain_error(
            "scale test needs t in [10*epsilon, 1) to keep the conditioned "
            "law aligned with the truncation");

    std::vector<DickmanSample> cond(static_cast<std::size_t>(cfg.samples));
    run_chunks(cfg.seed, /*salt=*/1, cfg.samples, threads,
               [&](SplitMix64& g, long i) {
                   cond[static_cast<std::size_t>(i)] =
                       one_dickman_sample(g, cfg.s, cfg.epsilon);
               });
    std::vector<DickmanSample> ref(static_cast<std::size_t>(cfg.samples));
    run_chunks(cfg.seed, /*salt=*/2, cfg.samples, threads,
               [&](SplitMix64& g, long i) {
                   ref[static_cast<std::size_t>(i)] =
                       one_dickman_sample(g, cfg.s, cfg.epsilon);
               });

    std::vector<double> scaled;
    for (const DickmanSample& smp : cond)
        if (smp.m < t) scaled.push_back(smp.y / t);
    ScaleInvarianceReport rep;
    rep.accepted = static_cast<long>(scaled.size());
    rep.unconditional = cfg.samples;
    if (rep.accepted < 100)
        throw std::runtime_error(
            "scale test: fewer than 100 conditioned samples survived; "
            "increase the sample budget or raise t");
    std::vector<double> plain;
    plain.reserve(ref.size());
    for (const DickmanSample& smp : ref) plain.push_back(smp.y);

    rep.ks = ks_two_sample(scaled, plain);
    double na = static_cast<double>(rep.accepted);
    double nb = static_cast<double>(rep.unconditional);
    rep.critical = ks_coeff_1pct * std::sqrt((na + nb) / (na * nb));
    rep.pass = rep.ks <= rep.critical;
    return rep;
}

TauEndpoints sample_renewal_path(const InterArrivalLaw& law, int steps,
                                 const SimulationConfig& cfg, int threads) {
    validate(cfg);
    if (steps < 1) throw std::domain_error("path needs at least one step");
    std::vector<double> cum = cumulative_table(law);
    TauEndpoints out;
    out.steps = steps;
    out.tau.assign(static_cast<std::size_t>(cfg.samples), 0);
    run_chunks(cfg.seed, /*salt=*/3, cfg.samples, threads,
               [&](SplitMix64& g, long i) {
                   long long tau = 0;
                   for (int k = 0; k < steps; ++k) tau += draw_increment(g, cum);
                   out.tau[static_cast<std::size_t>(i)] = tau;
               });
    return out;
}

SpacetimeEndpoints sample_srw_renewal_path(const InterArrivalLaw& base,
                                           int steps,
                                           const SimulationConfig& cfg,
                                           int threads) {
    validate(cfg);
    if (steps < 1) throw std::domain_error("path needs at least one step");
    std::vector<double> cum = cumulative_table(base);
    SpacetimeEndpoints out;
    out.steps = steps;
    out.tau.assign(static_cast<std::size_t>(cfg.samples), 0);
    out.x1.assign(static_cast<std::size_t>(cfg.samples), 0);
    out.x2.assign(static_cast<std::size_t>(cfg.samples), 0);
    run_chunks(cfg.seed, /*salt=*/4, cfg.samples, threads,
               [&](SplitMix64& g, long i) {
                   long long tau = 0, a = 0, b = 0;
                   for (int k = 0; k < steps; ++k) {
                       int m = draw_increment(g, cum);
                       tau += m;
                       // diagonal projections move as independent walks
                       a += signed_step_sum(g, m);
                       b += signed_step_sum(g, m);
                   }
                   out.tau[static_cast<std::size_t>(i)] = tau;
                   out.x1[static_cast<std::size_t>(i)] = (a + b) / 2;
                   out.x2[static_cast<std::size_t>(i)] = (a - b) / 2;
               });
    return out;
}

} // namespace dickman
