#pragma once

#include <vector>

namespace dickman {

// Inter-arrival law with a hard cutoff: P(T = n) = weight[n] / normalizer for
// 1 <= n <= cutoff, zero elsewhere.  prob stores the normalized masses and is
// what every algorithm consumes; weight keeps the raw inputs for reporting.
struct InterArrivalLaw {
  int cutoff = 0;
  std::vector<double> weight;  // index 0 unused
  std::vector<double> prob;    // index 0 unused, sums to 1
  double normalizer = 0.0;     // sum of weight[1..cutoff]
};

// Validates weights (finite, strictly positive) and normalizes with
// compensated summation so the probabilities sum to 1 within 1e-14.
InterArrivalLaw make_law(const std::vector<double>& weight_from_1);

// weight[n] = 1/n.  normalizer is then the harmonic number H_N.
InterArrivalLaw law_from_harmonic(int cutoff);

// The tilt that keeps the renewal density bounded: 1 + theta / log N.
// Requires N >= 2; at N = 1 the law is degenerate and the tilt is meaningless.
double lambda_for_theta(int cutoff, double theta);

// U(0) = 1, U(n) = lambda * sum_{m=1}^{min(n,N)} P(T=m) U(n-m).
// Throws overflow_error as soon as any U(n) exceeds 1e300.
std::vector<double> renewal_density(const InterArrivalLaw& law, double lambda,
                                    long n_max);

// Law of the k-th renewal epoch tau_k, truncated at n_max.  beyond carries
// the mass of paths that leave [0, n_max]; mass.sum() + beyond = 1 exactly
// up to roundoff.
struct TauPmf {
  std::vector<double> mass;  // mass[n] = P(tau_k = n), 0 <= n <= n_max
  double beyond = 0.0;
};

TauPmf exact_tau_pmf(const InterArrivalLaw& law, int k, long n_max);

}  // namespace dickman
