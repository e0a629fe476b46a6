#include "dickman/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "dickman/constants.hpp"
#include "dickman/green.hpp"
#include "dickman/kahan.hpp"

namespace dickman {

namespace {

// Independent continuum reference: plain composite Simpson over the weight
// parameter with the C library lgamma, no shared code with the evaluator.
double weighted_marginal_by_quadrature(double theta, double t) {
  double c = theta - euler_gamma;
  double lt = std::log(t);
  auto f = [&](double s) {
    if (s <= 0.0) return 0.0;
    return s * std::exp(c * s + (s - 1.0) * lt - ::lgamma(s + 1.0));
  };
  double hi = 60.0 + 40.0 * std::max(theta, 0.0);
  long n = 40000;
  double h = hi / n;
  KahanSum acc;
  acc.add(f(0.0));
  acc.add(f(hi));
  for (long i = 1; i < n; ++i) acc.add((i % 2 ? 4.0 : 2.0) * f(i * h));
  return acc.value() * h / 3.0;
}

bool nonincreasing_gap(const std::vector<TrendPoint>& pts) {
  for (size_t i = 1; i < pts.size(); ++i)
    if (std::abs(pts[i].ratio - 1.0) >
        std::abs(pts[i - 1].ratio - 1.0) + 1e-12)
      return false;
  return true;
}

}  // namespace

TrendReport verify_renewal_theorem(const std::vector<long>& cutoffs,
                                   double theta, double t, bool oracle_route) {
  if (cutoffs.empty())
    throw std::domain_error("renewal verification needs at least one cutoff");
  if (!(t > 0.0) || t > 1.0)
    throw std::domain_error("renewal verification is stated for t in (0,1]");
  TrendReport rep;
  if (oracle_route) {
    rep.reference = weighted_marginal_by_quadrature(theta, t);
  } else {
    rep.reference = GreenEvaluator(theta).value(t);
  }
  for (long N : cutoffs) {
    if (N < 2) throw std::domain_error("cutoffs must be >= 2");
    double lambda = lambda_for_theta(static_cast<int>(N), theta);
    InterArrivalLaw law = law_from_harmonic(static_cast<int>(N));
    long n = std::max<long>(1, std::llround(t * static_cast<double>(N)));
    std::vector<double> u = renewal_density(law, lambda, n);
    double ratio = (static_cast<double>(N) / std::log(static_cast<double>(N)) *
                    u[n]) /
                   rep.reference;
    rep.points.push_back({N, ratio});
  }
  rep.improving = nonincreasing_gap(rep.points);
  return rep;
}

SpacetimePointReport verify_spacetime_theorem(long cutoff, double theta,
                                              double t, double x1_scaled,
                                              double x2_scaled) {
  if (cutoff < 2) throw std::domain_error("cutoff must be >= 2");
  if (!(t > 0.0) || t > 1.0)
    throw std::domain_error("space-time verification is stated for t in (0,1]");
  SpacetimePointReport rep;
  rep.cutoff = cutoff;
  rep.n = std::max<long>(1, std::llround(t * static_cast<double>(cutoff)));
  double root = std::sqrt(static_cast<double>(cutoff));
  rep.x1 = std::llround(x1_scaled * root);
  rep.x2 = std::llround(x2_scaled * root);
  if ((rep.n + rep.x1 + rep.x2) % 2 != 0) {
    rep.x1 += 1;  // nudge onto the even sublattice
    rep.parity_adjusted = true;
  }

  SpaceTimeLaw law = spacetime_srw_law(static_cast<int>(cutoff));
  double lambda = lambda_for_theta(static_cast<int>(cutoff), theta);
  rep.bsu = spacetime_point(law, lambda, rep.n, rep.x1, rep.x2);
  double lnN = std::log(static_cast<double>(cutoff));
  rep.scaled =
      static_cast<double>(cutoff) * static_cast<double>(cutoff) / lnN * rep.bsu;
  std::vector<double> xi = {rep.x1 / root, rep.x2 / root};
  rep.reference =
      GreenEvaluator(theta).value(t) * heat_kernel(0.5, t, xi) * 2.0;
  rep.ratio = rep.scaled / rep.reference;
  return rep;
}

std::vector<double> diffusive_mass_profile(const SpaceTimeLaw& law,
                                           double lambda, long n,
                                           const std::vector<double>& Ms) {
  SpaceTimeDensity d = spacetime_renewal_density(law, lambda, n);
  const LatticePmf& s = d.slice[n];
  double u = d.time_marginal[n];
  if (u <= 0.0)
    throw std::domain_error("time marginal vanishes at the requested slice");
  std::vector<double> out;
  out.reserve(Ms.size());
  for (double M : Ms) {
    double cut = M * M * static_cast<double>(n);
    KahanSum tail;
    for (long x1 = -s.radius; x1 <= s.radius; ++x1)
      for (long x2 = -s.radius; x2 <= s.radius; ++x2)
        if (static_cast<double>(x1 * x1 + x2 * x2) > cut)
          tail.add(s.at(x1, x2));
    out.push_back(M * M * tail.value() / u);
  }
  return out;
}

}  // namespace dickman
