#pragma once

namespace dickman {

// ln Gamma(x) for x > 0, relative error <= 1e-13 over the whole domain.
// Own implementation (Lanczos) instead of std::lgamma so that emitted numbers
// do not depend on the host libm.
double log_gamma(double x);

} // namespace dickman
