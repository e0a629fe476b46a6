#pragma once

#include <cstdint>
#include <vector>

#include "dickman/renewal.hpp"

namespace dickman {

struct SimulationConfig {
    std::uint64_t seed = 0;
    long samples = 0;
    double epsilon = 1e-4; // jump-truncation level, in (0, 1)
    double s = 1.0;        // subordinator time, > 0
};

// throws std::domain_error when a field is out of range
void validate(const SimulationConfig& cfg);

// Named splittable generator (SplitMix64 core). Streams are indexed: the
// stream for index i is a pure function of (seed, salt, i), so parallel
// chunks reproduce independently of scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double next_unit(); // [0, 1), 53 random bits

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t salt,
                             std::uint64_t index);

private:
    std::uint64_t state_;
};

// Poisson draw by cdf inversion on one uniform; mean must stay desk-scale
// (the series walk is O(mean)).
long poisson_draw(SplitMix64& g, double mean);

struct DickmanSample {
    double y = 0.0; // truncated subordinator value
    double m = 0.0; // largest jump, 0 when no jump occurred
};

// Truncated-jump representation: per sample, a Poisson(s ln(1/eps)) number
// of jumps, each eps^U. Mean discarded mass is exactly s * eps.
std::vector<DickmanSample> sample_dickman(const SimulationConfig& cfg,
                                          int threads = 1);

struct ScaleInvarianceReport {
    double ks = 0.0;        // two-sample statistic
    long accepted = 0;      // conditioned sample size
    long unconditional = 0; // reference sample size
    double critical = 0.0;  // 1% two-sample threshold at realized sizes
    bool pass = false;
};

// Compares Y/t conditioned on {max jump < t} against an independent
// unconditional batch of equal budget. Requires t >= 10 * eps so the
// conditioned law is the t-truncated one up to the same relative bias.
ScaleInvarianceReport test_scale_invariance(const SimulationConfig& cfg,
                                            double t, int threads = 1);

struct TauEndpoints {
    int steps = 0;
    std::vector<long long> tau; // one endpoint per sample
};

// Sum of `steps` i.i.d. inter-arrival draws, inverse-cdf table lookup.
TauEndpoints sample_renewal_path(const InterArrivalLaw& law, int steps,
                                 const SimulationConfig& cfg, int threads = 1);

struct SpacetimeEndpoints {
    int steps = 0;
    std::vector<long long> tau;
    std::vector<long long> x1, x2;
};

// Space-time variant for the walk kernel: the holding time comes from the
// base table, the displacement from summing the defining +-1 steps along
// the two diagonal projections (exact, rejection-free).
SpacetimeEndpoints sample_srw_renewal_path(const InterArrivalLaw& base,
                                           int steps,
                                           const SimulationConfig& cfg,
                                           int threads = 1);

} // namespace dickman
