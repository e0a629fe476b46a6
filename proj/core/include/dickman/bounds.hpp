#pragma once

#include <vector>

#include "dickman/renewal.hpp"

namespace dickman {

// One inequality instance: exact left side from the pmf oracle against the
// closed-form right side at the supplied constants.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// P(tau_k = n) <= C k P(T=n) P(T<=n)^{k-1} exp(-q log+ q), q = ck/(log n + 1),
// for the harmonic law with cutoff N.  Requires n <= N.
BoundCheck bound_sharp_local(int cutoff, int k, long n, double C, double c);

// Upper tail: P(tau_k >= n) <= (C k m / (n (log m + 1)) ^ 1)^(n/m) for the
// harmonic law with cutoff m ("^" meaning capped at 1).
BoundCheck bound_fuk_nagaev(int m, int k, long n, double C);

// Lower tail: P(tau_k <= n) <= (n (log m + 1) / (c k m) ^ 1)^(ck/(log m + 1)).
BoundCheck bound_lower_tail(int m, int k, long n, double c);

// Exhaustive desk-scale sweeps.  The constants in the bounds above are
// existential; these return the tightest constant that makes every instance
// in the grid hold, which the tests freeze as empirical regression values.
double sharp_local_minimal_C(int cutoff, int k_max, long n_max, double c);
double fuk_nagaev_minimal_C(const std::vector<int>& ms, int k_max, long n_max);
double lower_tail_maximal_c(const std::vector<int>& ms, int k_max, long n_max);

}  // namespace dickman
