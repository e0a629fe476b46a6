#pragma once

namespace dickman {

// One-dimensional simple random walk started at 0 with +-1 steps.
// Point masses are evaluated in log space so rows stay usable out to
// n ~ 1e6 without intermediate overflow.

// log P(S_n = j); -infinity off the parity sublattice or outside [-n, n]
double srw_log_point(long n, long j);

// P(S_n = j); exact zero off support
double srw_point(long n, long j);

// P(S_n = 0); zero for odd n, asymptotically sqrt(2 / (pi n))
double srw_return(long n);

}  // namespace dickman
