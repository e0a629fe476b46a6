#pragma once

#include <functional>
#include <vector>

#include "dickman/constants.hpp"
#include "dickman/renewal.hpp"
#include "dickman/spacetime.hpp"

namespace dickman {

// Disorder enters only through its log moment generating function and the
// two standardized cumulants used by the small-variance series.
struct DisorderSpec {
    std::function<double(double)> cgf; // beta -> log E[exp(beta w)]
    double kappa3 = 0.0;
    double kappa4 = 0.0;
};

DisorderSpec gaussian_disorder();   // cgf b^2/2, kappa3 = kappa4 = 0
DisorderSpec rademacher_disorder(); // cgf log cosh b, kappa3 = 0, kappa4 = -2

// Rejects specs violating cgf(0) = 0, convexity, or monotone variance on a
// spot grid; throws std::domain_error.
void check_disorder(const DisorderSpec& d);

// exp(cgf(2b) - 2 cgf(b)) - 1, the chaos weight per disorder site
double sigma_beta2(const DisorderSpec& d, double beta);

// inverse of the above by bisection, relative tolerance 1e-14 on beta
double beta_from_sigma2(const DisorderSpec& d, double target);

// two-cumulant expansion of beta^2 at small target variance eps:
// eps - k3 eps^{3/2} + (3/2 k3^2 - 7/12 k4 - 1/2) eps^2
double series_beta2(const DisorderSpec& d, double eps);

// Squared return probability r(n) = (binom(2n, n) / 4^n)^2, evaluated in
// log space and squared after the final exponentiation.
double pinning_return_weight(long n);

// inter-arrival law with weights r(1..N); normalizer equals the partial sum
InterArrivalLaw pinning_weights(int N);

// pi * sum_{n <= N} r(n) - log N converges to gamma + log 16 - pi
inline constexpr double alpha_constant =
    euler_gamma + 2.7725887222397812 - pi;

struct AlphaCheck {
    double r_sum = 0.0;    // compensated sum of r(n), n <= N
    double residual = 0.0; // pi * r_sum - log N - alpha_constant
};

AlphaCheck alpha_check(long N);

// beta tuned so that sigma_beta2 = (1/r_sum(N)) (1 + theta / log N)
double beta_for_theta(const DisorderSpec& d, int N, double theta);

struct SecondMoment {
    double value = 0.0;
    double lambda = 0.0; // sigma2 * r_sum, the tilt fed to the renewal layer
    double sigma2 = 0.0;
    double beta = 0.0;
    bool parity_zero = false; // space-time query off the even sublattice
};

// Constrained and free second moments of the pinned-walk partition function,
// through the weighted renewal density of the pinning law. beta = 0 falls
// back to the first chaos term (constrained) or to 1 (free).
SecondMoment pinning_second_moment(long n, int N, double beta,
                                   const DisorderSpec& d);
SecondMoment pinning_free_second_moment(long n, int N, double beta,
                                        const DisorderSpec& d);

// Planar walk transition probability q_n(x), a product of two diagonal
// one-dimensional walk factors.
double polymer_kernel_q(long n, long x1, long x2);

// Space-time law with time weights r(m) and rows q_m(x)^2 / u(m)^2. The
// rows factor over the diagonal coordinates, so the law carries an axis
// evaluator for the large-scale Fourier route.
SpaceTimeLaw polymer_law(int N);

// Constrained moment at a space-time endpoint: dense convolution for small
// n, Fourier inversion above. Off-parity endpoints return exact 0 with the
// parity flag set.
SecondMoment polymer_second_moment(long n, long x1, long x2, int N,
                                   double beta, const DisorderSpec& d);

// Free moment computed from the space-time slices and asserted against the
// pinning free formula; the two agree by the marginal identity.
SecondMoment polymer_free_second_moment(long n, int N, double beta,
                                        const DisorderSpec& d);

} // namespace dickman
