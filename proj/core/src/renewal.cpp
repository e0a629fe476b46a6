#include "dickman/renewal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dickman/kahan.hpp"

namespace dickman {

InterArrivalLaw make_law(const std::vector<double>& weight_from_1) {
  if (weight_from_1.empty())
    throw std::domain_error("inter-arrival law needs at least one weight");
  InterArrivalLaw law;
  law.cutoff = static_cast<int>(weight_from_1.size());
  law.weight.assign(law.cutoff + 1, 0.0);
  KahanSum total;
  for (int n = 1; n <= law.cutoff; ++n) {
    double w = weight_from_1[n - 1];
    if (!std::isfinite(w) || w <= 0.0)
      throw std::domain_error("inter-arrival weight at n=" + std::to_string(n) +
                              " must be finite and positive");
    law.weight[n] = w;
    total.add(w);
  }
  law.normalizer = total.value();
  law.prob.assign(law.cutoff + 1, 0.0);
  KahanSum check;
  for (int n = 1; n <= law.cutoff; ++n) {
    law.prob[n] = law.weight[n] / law.normalizer;
    check.add(law.prob[n]);
  }
  if (std::abs(check.value() - 1.0) > 1e-14)
    throw std::runtime_error("normalized inter-arrival masses drift from 1");
  return law;
}

InterArrivalLaw law_from_harmonic(int cutoff) {
  if (cutoff < 1) throw std::domain_error("harmonic law needs cutoff >= 1");
  std::vector<double> w(cutoff);
  for (int n = 1; n <= cutoff; ++n) w[n - 1] = 1.0 / n;
  return make_law(w);
}

double lambda_for_theta(int cutoff, double theta) {
  if (cutoff < 2)
    throw std::domain_error("tilt undefined below cutoff 2: log N vanishes");
  if (!std::isfinite(theta)) throw std::domain_error("tilt needs finite theta");
  return 1.0 + theta / std::log(static_cast<double>(cutoff));
}

std::vector<double> renewal_density(const InterArrivalLaw& law, double lambda,
                                    long n_max) {
  if (n_max < 0) throw std::domain_error("renewal density needs n_max >= 0");
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw std::domain_error("renewal density needs finite lambda >= 0");
  std::vector<double> u(static_cast<size_t>(n_max) + 1, 0.0);
  u[0] = 1.0;
  for (long n = 1; n <= n_max; ++n) {
    long reach = std::min<long>(n, law.cutoff);
    double acc = 0.0;
    for (long m = 1; m <= reach; ++m) acc += law.prob[m] * u[n - m];
    u[n] = lambda * acc;
    if (u[n] > 1e300)
      throw std::overflow_error("renewal density left the representable range");
  }
  return u;
}

TauPmf exact_tau_pmf(const InterArrivalLaw& law, int k, long n_max) {
  if (k < 0) throw std::domain_error("renewal count k must be >= 0");
  if (n_max < 0) throw std::domain_error("tau pmf needs n_max >= 0");
  TauPmf out;
  out.mass.assign(static_cast<size_t>(n_max) + 1, 0.0);
  out.mass[0] = 1.0;
  out.beyond = 0.0;
  std::vector<double> next(out.mass.size());
  for (int step = 0; step < k; ++step) {
    // mass escaping the window this step, summed directly so that an empty
    // escape zone yields an exact zero; mass already beyond stays beyond
    // because every increment is at least 1
    KahanSum escape;
    for (long j = std::max<long>(0, n_max - law.cutoff + 1); j <= n_max; ++j) {
      if (out.mass[j] == 0.0) continue;
      for (long m = n_max - j + 1; m <= law.cutoff; ++m)
        escape.add(law.prob[m] * out.mass[j]);
    }
    out.beyond += escape.value();
    for (long n = 0; n <= n_max; ++n) {
      long reach = std::min<long>(n, law.cutoff);
      double acc = 0.0;
      for (long m = 1; m <= reach; ++m) acc += law.prob[m] * out.mass[n - m];
      next[n] = acc;
    }
    out.mass.swap(next);
  }
  return out;
}

}  // namespace dickman
