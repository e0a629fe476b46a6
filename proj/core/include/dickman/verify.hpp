#pragma once

#include <vector>

#include "dickman/spacetime.hpp"

namespace dickman {

struct TrendPoint {
  long scale = 0;
  double ratio = 0.0;
};

// Sweep of a discrete-to-continuum ratio along growing cutoffs.  No
// convergence rate is proven for these limits; the tolerances applied to
// `points` by callers are empirical regression values, not claims.
struct TrendReport {
  double reference = 0.0;           // continuum value in the denominator
  std::vector<TrendPoint> points;   // one ratio per cutoff
  bool improving = false;           // |ratio - 1| non-increasing
};

// ratio_N = [N / log N * U_{N, lambda_N}(round(tN))] / G_theta(t) for the
// harmonic law, t in (0,1].  With oracle_route the continuum reference is
// recomputed by direct quadrature of the weighted marginal density instead
// of the library evaluator, exercising an independent path.
TrendReport verify_renewal_theorem(const std::vector<long>& cutoffs,
                                   double theta, double t,
                                   bool oracle_route = false);

struct SpacetimePointReport {
  long cutoff = 0;
  long n = 0;
  long x1 = 0, x2 = 0;          // lattice point actually evaluated
  bool parity_adjusted = false; // query was moved onto the even sublattice
  double bsu = 0.0;
  double scaled = 0.0;          // N^2 / log N * bsu
  double reference = 0.0;       // G_theta(t) g_{t/2}(xi) * 2
  double ratio = 0.0;
};

// Space-time ratio at one scaled point for the simple-random-walk law.  The
// walk kernel has per-coordinate variance m/2, so c = 1/2; the factor 2 in
// the reference accounts for the even-sublattice periodicity.
SpacetimePointReport verify_spacetime_theorem(long cutoff, double theta,
                                              double t, double x1_scaled,
                                              double x2_scaled);

// For each M: M^2 * sum_{|x| > M sqrt(n)} bsU(n,x) / U(n), dense route.
// Bounded across M exactly when the mass stays on the diffusive scale.
std::vector<double> diffusive_mass_profile(const SpaceTimeLaw& law,
                                           double lambda, long n,
                                           const std::vector<double>& Ms);

}  // namespace dickman
