#include "dickman/walk.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dickman/gamma.hpp"

namespace dickman {

double srw_log_point(long n, long j) {
  if (n < 0) throw std::domain_error("walk length must be >= 0");
  if (j < -n || j > n || ((n + j) & 1L))
    return -std::numeric_limits<double>::infinity();
  double up = 0.5 * static_cast<double>(n + j);
  // binom(n, (n+j)/2) / 2^n
  return log_gamma(n + 1.0) - log_gamma(up + 1.0) -
         log_gamma(n - up + 1.0) - n * 0.6931471805599453094;
}

double srw_point(long n, long j) {
  double l = srw_log_point(n, j);
  return std::isinf(l) ? 0.0 : std::exp(l);
}

double srw_return(long n) { return srw_point(n, 0); }

}  // namespace dickman
