#include "dickman/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dickman/kahan.hpp"

namespace dickman {

namespace {

// equality cases land on the boundary up to roundoff
bool leq_with_slack(double lhs, double rhs) {
  return lhs <= rhs * (1.0 + 1e-9) + 1e-300;
}

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

double prefix_prob(const InterArrivalLaw& law, long n) {
  KahanSum s;
  for (long m = 1; m <= std::min<long>(n, law.cutoff); ++m) s.add(law.prob[m]);
  return std::min(s.value(), 1.0);
}

}  // namespace

BoundCheck bound_sharp_local(int cutoff, int k, long n, double C, double c) {
  if (n < 1 || n > cutoff)
    throw std::domain_error("sharp local bound is stated for 1 <= n <= N");
  if (k < 0) throw std::domain_error("renewal count k must be >= 0");
  InterArrivalLaw law = law_from_harmonic(cutoff);
  BoundCheck out;
  out.lhs = exact_tau_pmf(law, k, n).mass[n];
  if (k == 0) {
    out.rhs = 0.0;
  } else {
    double q = c * k / (std::log(static_cast<double>(n)) + 1.0);
    double penalty = std::exp(-q * log_plus(q));
    out.rhs = C * k * law.prob[n] *
              std::pow(prefix_prob(law, n), static_cast<double>(k - 1)) *
              penalty;
  }
  out.holds = leq_with_slack(out.lhs, out.rhs);
  return out;
}

BoundCheck bound_fuk_nagaev(int m, int k, long n, double C) {
  if (n < 0 || k < 0) throw std::domain_error("tail bound needs n, k >= 0");
  InterArrivalLaw law = law_from_harmonic(m);
  BoundCheck out;
  if (n == 0) {
    out.lhs = 1.0;
  } else {
    out.lhs = exact_tau_pmf(law, k, n - 1).beyond;
  }
  double lm = std::log(static_cast<double>(m)) + 1.0;
  double base =
      n > 0 ? std::min(C * k * m / (static_cast<double>(n) * lm), 1.0) : 1.0;
  out.rhs = std::pow(base, static_cast<double>(n) / m);
  out.holds = leq_with_slack(out.lhs, out.rhs);
  return out;
}

BoundCheck bound_lower_tail(int m, int k, long n, double c) {
  if (n < 0 || k < 0) throw std::domain_error("tail bound needs n, k >= 0");
  InterArrivalLaw law = law_from_harmonic(m);
  BoundCheck out;
  TauPmf pmf = exact_tau_pmf(law, k, n);
  KahanSum s;
  for (double v : pmf.mass) s.add(v);
  out.lhs = std::min(s.value(), 1.0);
  double lm = std::log(static_cast<double>(m)) + 1.0;
  double base =
      k > 0 ? std::min(static_cast<double>(n) * lm / (c * k * m), 1.0) : 1.0;
  out.rhs = std::pow(base, c * k / lm);
  out.holds = leq_with_slack(out.lhs, out.rhs);
  return out;
}

double sharp_local_minimal_C(int cutoff, int k_max, long n_max, double c) {
  InterArrivalLaw law = law_from_harmonic(cutoff);
  long n_cap = std::min<long>(n_max, cutoff);
  std::vector<double> prefix(n_cap + 1, 0.0);
  {
    KahanSum s;
    for (long n = 1; n <= n_cap; ++n) {
      s.add(law.prob[n]);
      prefix[n] = std::min(s.value(), 1.0);
    }
  }
  double best = 0.0;
  TauPmf pmf;
  pmf.mass.assign(n_cap + 1, 0.0);
  pmf.mass[0] = 1.0;
  std::vector<double> next(pmf.mass.size());
  for (int k = 1; k <= k_max; ++k) {
    for (long n = 0; n <= n_cap; ++n) {
      double acc = 0.0;
      for (long m = 1; m <= std::min<long>(n, cutoff); ++m)
        acc += law.prob[m] * pmf.mass[n - m];
      next[n] = acc;
    }
    pmf.mass.swap(next);
    for (long n = 1; n <= n_cap; ++n) {
      double lhs = pmf.mass[n];
      if (lhs <= 0.0) continue;
      double q = c * k / (std::log(static_cast<double>(n)) + 1.0);
      double den = k * law.prob[n] *
                   std::pow(prefix[n], static_cast<double>(k - 1)) *
                   std::exp(-q * log_plus(q));
      best = std::max(best, lhs / den);
    }
  }
  return best;
}

double fuk_nagaev_minimal_C(const std::vector<int>& ms, int k_max,
                            long n_max) {
  double best = 0.0;
  for (int m : ms) {
    InterArrivalLaw law = law_from_harmonic(m);
    double lm = std::log(static_cast<double>(m)) + 1.0;
    for (int k = 1; k <= k_max; ++k) {
      TauPmf pmf = exact_tau_pmf(law, k, n_max);
      // suffix[n] = P(tau_k >= n)
      std::vector<double> suffix(n_max + 2, 0.0);
      suffix[n_max + 1] = pmf.beyond;
      for (long n = n_max; n >= 1; --n) suffix[n] = suffix[n + 1] + pmf.mass[n];
      for (long n = 1; n <= n_max; ++n) {
        double lhs = suffix[n];
        if (lhs <= 0.0) continue;
        double need = std::pow(lhs, static_cast<double>(m) / n) *
                      static_cast<double>(n) * lm / (static_cast<double>(k) * m);
        best = std::max(best, need);
      }
    }
  }
  return best;
}

double lower_tail_maximal_c(const std::vector<int>& ms, int k_max,
                            long n_max) {
  double overall = 1e6;
  for (int m : ms) {
    InterArrivalLaw law = law_from_harmonic(m);
    double lm = std::log(static_cast<double>(m)) + 1.0;
    for (int k = 1; k <= k_max; ++k) {
      TauPmf pmf = exact_tau_pmf(law, k, n_max);
      KahanSum run;
      for (long n = 0; n <= n_max; ++n) {
        run.add(pmf.mass[n]);
        double lhs = std::min(run.value(), 1.0);
        if (lhs <= 0.0) continue;
        auto rhs_at = [&](double c) {
          double base =
              std::min(static_cast<double>(n) * lm / (c * k * m), 1.0);
          return std::pow(base, c * k / lm);
        };
        if (lhs <= rhs_at(1e6)) continue;  // never binding
        double lo = 1e-9, hi = 1e6;
        for (int it = 0; it < 200; ++it) {
          double mid = 0.5 * (lo + hi);
          (lhs <= rhs_at(mid) ? lo : hi) = mid;
        }
        overall = std::min(overall, lo);
      }
    }
  }
  return overall;
}

}  // namespace dickman
