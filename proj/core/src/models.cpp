#include "dickman/models.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "dickman/kahan.hpp"
#include "dickman/walk.hpp"

namespace dickman {

namespace {

// one-axis squared walk weights at the last requested length; the Fourier
// route queries every node of a length before moving on, so a depth-1 memo
// removes the binomial rebuild without unbounded storage
struct AxisMemo {
    long m = -1;
    std::vector<double> w2; // w2[k] at displacement m - 2k, k = 0..m
    double norm = 0.0;
};

double squared_axis_factor(AxisMemo& memo, long m, double xi) {
    if (memo.m != m) {
        memo.w2.assign(static_cast<std::size_t>(m) + 1, 0.0);
        KahanSum tot;
        for (long k = 0; k <= m; ++k) {
            double w = srw_point(m, m - 2 * k);
            memo.w2[static_cast<std::size_t>(k)] = w * w;
            tot.add(w * w);
        }
        memo.norm = tot.value();
        memo.m = m;
    }
    // sum_k w2[k] cos((m - 2k) xi) via the two-term cosine recurrence
    KahanSum acc;
    double c_prev = std::cos(static_cast<double>(m) * xi);
    acc.add(memo.w2[0] * c_prev);
    if (m >= 1) {
        double c_cur = std::cos(static_cast<double>(m - 2) * xi);
        acc.add(memo.w2[1] * c_cur);
        const double twice = 2.0 * std::cos(2.0 * xi);
        for (long k = 2; k <= m; ++k) {
            double c_next = twice * c_cur - c_prev;
            c_prev = c_cur;
            c_cur = c_next;
            acc.add(memo.w2[static_cast<std::size_t>(k)] * c_next);
        }
    }
    return acc.value() / memo.norm;
}

LatticePmf squared_kernel_row(long m) {
    // rotated coordinates x1 +- x2 range over [-2m, 2m]; the squared walk
    // factor is zero beyond [-m, m], which empties the corners of the square
    std::vector<double> w2(static_cast<std::size_t>(4 * m + 1), 0.0);
    for (long a = -m; a <= m; ++a) {
        double w = srw_point(m, a);
        w2[static_cast<std::size_t>(a + 2 * m)] = w * w;
    }
    LatticePmf row(static_cast<int>(m));
    KahanSum tot;
    for (long x1 = -m; x1 <= m; ++x1)
        for (long x2 = -m; x2 <= m; ++x2) {
            double v = w2[static_cast<std::size_t>(x1 + x2 + 2 * m)] *
                       w2[static_cast<std::size_t>(x1 - x2 + 2 * m)];
            row.cell(x1, x2) = v;
            tot.add(v);
        }
    // rescale away the last-bit drift of the log-space binomials
    double scale = 1.0 / tot.value();
    for (double& v : row.mass) v *= scale;
    return row;
}

void require_endpoint(long n, int N) {
    if (N < 1) throw std::domain_error("cutoff must be >= 1");
    if (n < 1 || n > N)
        throw std::domain_error("moment endpoint must lie in [1, cutoff]");
}

double require_sigma2(const DisorderSpec& d, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::domain_error("beta must be finite and >= 0");
    return sigma_beta2(d, beta);
}

// dense convolution is exact but its slice footprint grows quadratically;
// past this endpoint the frequency route takes over
constexpr long kDenseLimit = 32;

} // namespace

DisorderSpec gaussian_disorder() {
    DisorderSpec d;
    d.cgf = [](double b) { return 0.5 * b * b; };
    d.kappa3 = 0.0;
    d.kappa4 = 0.0;
    return d;
}

DisorderSpec rademacher_disorder() {
    DisorderSpec d;
    // log cosh through log1p(exp(-2|b|)) to stay finite for large |b|
    d.cgf = [](double b) {
        double a = std::abs(b);
        return a - 0.6931471805599453094 + std::log1p(std::exp(-2.0 * a));
    };
    d.kappa3 = 0.0;
    d.kappa4 = -2.0;
    return d;
}

void check_disorder(const DisorderSpec& d) {
    if (!d.cgf) throw std::domain_error("disorder spec has no cgf");
    if (std::abs(d.cgf(0.0)) > 1e-12)
        throw std::domain_error("disorder cgf must vanish at 0");
    const double grid[] = {0.0, 0.25, 0.5, 1.0, 2.0, 3.0};
    double prev = 0.0;
    for (int i = 0; i < 6; ++i) {
        double b = grid[i];
        if (i >= 2) {
            double lo = d.cgf(grid[i - 2]), mid = d.cgf(grid[i - 1]),
                   hi = d.cgf(b);
            if (2.0 * mid > lo + hi + 1e-10)
                throw std::domain_error("disorder cgf fails convexity spot check");
        }
        double s2 = std::exp(d.cgf(2.0 * b) - 2.0 * d.cgf(b)) - 1.0;
        if (!(s2 >= -1e-12))
            throw std::domain_error("disorder variance went negative");
        if (s2 + 1e-12 < prev)
            throw std::domain_error("disorder variance is not monotone in beta");
        prev = s2;
    }
}

double sigma_beta2(const DisorderSpec& d, double beta) {
    if (!d.cgf) throw std::domain_error("disorder spec has no cgf");
    if (!(beta >= 0.0))
        throw std::domain_error("sigma_beta2 is defined for beta >= 0");
    double s2 = std::exp(d.cgf(2.0 * beta) - 2.0 * d.cgf(beta)) - 1.0;
    return s2 < 0.0 && s2 > -1e-12 ? 0.0 : s2;
}

double beta_from_sigma2(const DisorderSpec& d, double target) {
    check_disorder(d);
    if (!(target >= 0.0) || !std::isfinite(target))
        throw std::domain_error("target variance must be finite and >= 0");
    if (target == 0.0) return 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (sigma_beta2(d, hi) < target) {
        hi *= 2.0;
        if (++doublings > 60)
            throw std::domain_error("target variance not reachable by this disorder");
    }
    double lo = 0.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (sigma_beta2(d, mid) < target ? lo : hi) = mid;
    }
    double beta = 0.5 * (lo + hi);
    double back = sigma_beta2(d, beta);
    if (std::abs(back - target) > 1e-8 * std::max(1.0, target))
        throw std::domain_error("disorder variance is not invertible near the target");
    return beta;
}

double series_beta2(const DisorderSpec& d, double eps) {
    if (!(eps >= 0.0)) throw std::domain_error("series argument must be >= 0");
    double c2 = 1.5 * d.kappa3 * d.kappa3 - (7.0 / 12.0) * d.kappa4 - 0.5;
    return eps - d.kappa3 * std::pow(eps, 1.5) + c2 * eps * eps;
}

double pinning_return_weight(long n) {
    if (n < 1) throw std::domain_error("return weight needs n >= 1");
    double u = srw_return(2 * n);
    return u * u;
}

InterArrivalLaw pinning_weights(int N) {
    if (N < 1) throw std::domain_error("cutoff must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n)
        w[static_cast<std::size_t>(n - 1)] = pinning_return_weight(n);
    return make_law(w);
}

AlphaCheck alpha_check(long N) {
    if (N < 1) throw std::domain_error("cutoff must be >= 1");
    KahanSum sum;
    for (long n = 1; n <= N; ++n) sum.add(pinning_return_weight(n));
    AlphaCheck out;
    out.r_sum = sum.value();
    out.residual =
        pi * out.r_sum - std::log(static_cast<double>(N)) - alpha_constant;
    return out;
}

double beta_for_theta(const DisorderSpec& d, int N, double theta) {
    if (N < 2) throw std::domain_error("critical-window tuning needs cutoff >= 2");
    double r_sum = alpha_check(N).r_sum;
    double target =
        (1.0 + theta / std::log(static_cast<double>(N))) / r_sum;
    if (!(target > 0.0))
        throw std::domain_error("requested variance is not positive at this theta");
    return beta_from_sigma2(d, target);
}

SecondMoment pinning_second_moment(long n, int N, double beta,
                                   const DisorderSpec& d) {
    require_endpoint(n, N);
    SecondMoment sm;
    sm.beta = beta;
    sm.sigma2 = require_sigma2(d, beta);
    InterArrivalLaw law = pinning_weights(N);
    sm.lambda = sm.sigma2 * law.normalizer;
    if (sm.sigma2 == 0.0) {
        sm.value = pinning_return_weight(n); // surviving first chaos term
        return sm;
    }
    std::vector<double> u = renewal_density(law, sm.lambda, n);
    sm.value = u[static_cast<std::size_t>(n)] / sm.sigma2;
    return sm;
}

SecondMoment pinning_free_second_moment(long n, int N, double beta,
                                        const DisorderSpec& d) {
    require_endpoint(n, N);
    SecondMoment sm;
    sm.beta = beta;
    sm.sigma2 = require_sigma2(d, beta);
    InterArrivalLaw law = pinning_weights(N);
    sm.lambda = sm.sigma2 * law.normalizer;
    if (sm.sigma2 == 0.0) {
        sm.value = 1.0;
        return sm;
    }
    std::vector<double> u = renewal_density(law, sm.lambda, n);
    KahanSum acc;
    acc.add(1.0);
    for (long l = 1; l <= n; ++l) acc.add(u[static_cast<std::size_t>(l)]);
    sm.value = acc.value();
    return sm;
}

double polymer_kernel_q(long n, long x1, long x2) {
    if (n < 1) throw std::domain_error("kernel needs n >= 1");
    return srw_point(n, x1 + x2) * srw_point(n, x1 - x2);
}

SpaceTimeLaw polymer_law(int N) {
    auto memo = std::make_shared<AxisMemo>();
    SpaceTimeLaw::AxisFn axis = [memo](long m, double xi) {
        return squared_axis_factor(*memo, m, xi);
    };
    return SpaceTimeLaw(pinning_weights(N), squared_kernel_row, axis,
                        /*rotated_parity=*/true);
}

SecondMoment polymer_second_moment(long n, long x1, long x2, int N,
                                   double beta, const DisorderSpec& d) {
    require_endpoint(n, N);
    SecondMoment sm;
    sm.beta = beta;
    sm.sigma2 = require_sigma2(d, beta);
    InterArrivalLaw base = pinning_weights(N);
    sm.lambda = sm.sigma2 * base.normalizer;
    if ((n + x1 + x2) % 2 != 0) {
        sm.parity_zero = true;
        sm.value = 0.0;
        return sm;
    }
    if (sm.sigma2 == 0.0) {
        double q = polymer_kernel_q(n, x1, x2);
        sm.value = q * q;
        return sm;
    }
    SpaceTimeLaw law = polymer_law(N);
    double bsu;
    if (n <= kDenseLimit) {
        SpaceTimeDensity den = spacetime_renewal_density(law, sm.lambda, n);
        bsu = den.slice[static_cast<std::size_t>(n)].at(x1, x2);
    } else {
        bsu = spacetime_point(law, sm.lambda, n, x1, x2);
    }
    sm.value = bsu / sm.sigma2;
    return sm;
}

SecondMoment polymer_free_second_moment(long n, int N, double beta,
                                        const DisorderSpec& d) {
    require_endpoint(n, N);
    SecondMoment sm;
    sm.beta = beta;
    sm.sigma2 = require_sigma2(d, beta);
    InterArrivalLaw base = pinning_weights(N);
    sm.lambda = sm.sigma2 * base.normalizer;
    if (sm.sigma2 == 0.0) {
        sm.value = 1.0;
        return sm;
    }
    SpaceTimeDensity den =
        spacetime_renewal_density(polymer_law(N), sm.lambda, n);
    KahanSum spatial;
    spatial.add(1.0);
    for (long l = 1; l <= n; ++l)
        spatial.add(den.time_marginal[static_cast<std::size_t>(l)]);
    sm.value = spatial.value();

    std::vector<double> u = renewal_density(base, sm.lambda, n);
    KahanSum flat;
    flat.add(1.0);
    for (long l = 1; l <= n; ++l) flat.add(u[static_cast<std::size_t>(l)]);
    double other = flat.value();
    if (std::abs(sm.value - other) > 1e-10 * std::max(1.0, std::abs(other)))
        throw std::runtime_error(
            "free-moment routes disagree beyond the marginal-identity budget");
    return sm;
}

} // namespace dickman
