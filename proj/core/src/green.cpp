#include "dickman/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dickman/constants.hpp"
#include "dickman/gamma.hpp"
#include "dickman/interp.hpp"
#include "dickman/kahan.hpp"
#include "dickman/quadrature.hpp"

namespace dickman {

namespace {

constexpr double ln2 = 0.69314718055994531;
constexpr double zeta2 = 1.6449340668482264; // pi^2/6
constexpr double cell_h = 0.0009765625;      // 2^-10 extension cache step

template <class F>
double simpson_n(F& f, double a, double b, int n) {
    double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += (i & 1 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

// Integral over (0, inf) of a weight that decays super-exponentially past its
// peak. Pieces halve toward 0 so a peak at any scale is resolved; the cutoff
// doubles until the integrand there is below 1e-16 of the running estimate.
template <class F>
double decay_integral(F&& phi, double rel_tol) {
    double s_max = 8.0;
    double coarse = 0.0;
    for (;;) {
        coarse = 0.0;
        double b = s_max;
        for (int k = 0; k < 64 && b > 1e-15; ++k) {
            coarse += simpson_n(phi, 0.5 * b, b, 8);
            b *= 0.5;
        }
        if (s_max >= 4096.0 || std::abs(phi(s_max)) <= 1e-16 * std::abs(coarse))
            break;
        s_max *= 2.0;
    }
    double piece_tol = rel_tol * std::abs(coarse) / 64.0;
    if (!(piece_tol > 0.0)) piece_tol = 1e-300;
    KahanSum acc;
    double b = s_max;
    for (int k = 0; k < 64 && b > 1e-15; ++k) {
        acc.add(adaptive_simpson(phi, 0.5 * b, b, piece_tol));
        b *= 0.5;
    }
    return acc.value();
}

} // namespace

GreenEvaluator::GreenEvaluator(double theta, double quad_tol, int max_interval)
    : theta_(theta), quad_tol_(quad_tol), max_interval_(max_interval) {
    if (!std::isfinite(theta)) throw std::domain_error("green: theta must be finite");
    if (!(quad_tol > 0.0)) throw std::domain_error("green: quad_tol must be positive");
    if (max_interval < 1 || max_interval > 64)
        throw std::domain_error("green: max_interval must be in [1, 64]");
    layers_.resize((std::size_t)max_interval_);
    for (int m = 1; m < max_interval_; ++m) {
        layers_[m].reset(new std::atomic<double>[1024]);
        for (int j = 0; j < 1024; ++j)
            layers_[m][j].store(std::numeric_limits<double>::quiet_NaN(),
                                std::memory_order_relaxed);
    }
}

double GreenEvaluator::base(double t) const {
    if (!(t > 0.0)) throw std::domain_error("green_G: t must be positive");
    if (t > 1.0)
        throw std::domain_error("green_G: t > 1 is reached through the extension");
    double c = theta_ - euler_gamma, lt = std::log(t);
    auto phi = [c, lt](double s) {
        return s <= 0.0 ? 0.0 : s * std::exp(c * s + (s - 1.0) * lt - log_gamma(s + 1.0));
    };
    return decay_integral(phi, quad_tol_);
}

double GreenEvaluator::bar(double u) const {
    if (!(u > 0.0) || u > 1.0)
        throw std::domain_error("green_bar: u must be in (0, 1]");
    double c = theta_ - euler_gamma, lu = std::log(u);
    auto phi = [c, lu](double s) {
        return std::exp(c * s + s * lu - log_gamma(s + 1.0));
    };
    return decay_integral(phi, quad_tol_);
}

void GreenEvaluator::build_tables() const {
    std::call_once(tables_once_, [this] {
        bulk_.resize(897);
        for (int j = 0; j < 897; ++j) bulk_[j] = base(0.125 + j * cell_h);
        grat_.resize(849);
        brat_.resize(849);
        for (int j = 0; j < 849; ++j) {
            double l = 3.0 + j * 0.0625;
            double u = std::exp2(-l);
            double L = l * ln2;
            grat_[j] = base(u) * u * L * L;
            brat_[j] = bar(u) * L;
        }
    });
}

double GreenEvaluator::table_g(double u) const {
    if (u >= 0.125) {
        double pos = (u - 0.125) * 1024.0;
        long lo = std::clamp((long)pos - 1, 0L, 893L);
        return lagrange4(&bulk_[lo], 0.125 + lo * cell_h, cell_h, u);
    }
    double l = -std::log2(u);
    double L = l * ln2;
    if (l <= 56.0) {
        double pos = (l - 3.0) * 16.0;
        long lo = std::clamp((long)pos - 1, 0L, 845L);
        double r = lagrange4(&grat_[lo], 3.0 + lo * 0.0625, 0.0625, l);
        return r / (u * L * L);
    }
    double x = 1.0 / L;
    return (1.0 + 2.0 * theta_ * x + 3.0 * (theta_ * theta_ - zeta2) * x * x) /
           (u * L * L);
}

double GreenEvaluator::bar_small(double u) const {
    double l = -std::log2(u);
    double L = l * ln2;
    if (l <= 56.0) {
        if (l < 3.0) return bar(u);
        double pos = (l - 3.0) * 16.0;
        long lo = std::clamp((long)pos - 1, 0L, 845L);
        return lagrange4(&brat_[lo], 3.0 + lo * 0.0625, 0.0625, l) / L;
    }
    double x = 1.0 / L;
    return (1.0 + theta_ * x + (theta_ * theta_ - zeta2) * x * x) / L;
}

// J(u) = Int_{max(0, t-u-1)}^{B} G(x) / (pol + (B - x)) dx with B = t - T and
// pol = T - u; the pole in x sits at distance pol beyond the endpoint B.
// Panels double away from the lower end (G varies on geometric scales) and
// their width is capped by a quarter of the distance to the pole. When the
// lower end is 0 the G mass below eps enters analytically through Gbar and
// the first-moment correction eps/ln^2(1/eps).
double GreenEvaluator::j_inner(double t, double big_t, double u) const {
    double pol = big_t - u;
    double B = t - big_t;
    double A = t - u - 1.0;
    KahanSum acc;
    double x0;
    if (A > 0.0) {
        x0 = A;
    } else {
        double D = pol + B;
        double eps = std::min(9.5367431640625e-7, D * 0.000244140625);
        if (eps > 0.5 * B) eps = 0.5 * B;
        double le = -std::log(eps);
        acc.add(bar_small(eps) / D);
        acc.add(eps / (le * le) * (1.0 + (2.0 * theta_ - 2.0) / le) / (D * D));
        x0 = eps;
    }
    auto f = [&](double x) { return table_g(x) / (pol + (B - x)); };
    int guard = 0;
    while (x0 < B && ++guard < 4000) {
        double x1 = std::min(2.0 * x0, x0 + 0.25 * (pol + (B - x0)));
        if (x1 > B) x1 = B;
        acc.add(gauss4(f, x0, x1));
        x0 = x1;
    }
    return acc.value();
}

double GreenEvaluator::straddle(double t) const {
    if (!(t > 1.0)) throw std::domain_error("green straddle: t must exceed 1");
    if (t > (double)max_interval_)
        throw std::domain_error("green straddle: t beyond max_interval");
    build_tables();
    int ti = (int)std::ceil(t) - 1;
    double T = (double)ti;
    auto g_at = [&](double u) { return u <= 1.0 ? table_g(u) : layer_g(u); };
    auto f = [&](double u) { return g_at(u) * j_inner(t, T, u); };
    KahanSum acc;
    // geometric refinement into both ends: G blows up (or the layer below
    // starts) at the left end, J is log-divergent at the right end, and the
    // split point t-1 is where the x lower limit hits 0 (J kinks there)
    auto graded = [&](double a, double b) {
        double len = b - a;
        if (!(len > 0.0)) return;
        double prev = a;
        for (int k = 36; k >= 1; --k) {
            double c = a + std::ldexp(len, -k);
            acc.add(gauss4(f, prev, c));
            prev = c;
        }
        for (int k = 2; k <= 36; ++k) {
            double c = b - std::ldexp(len, -k);
            acc.add(gauss4(f, prev, c));
            prev = c;
        }
        acc.add(gauss4(f, prev, b));
    };
    double ustar = t - 1.0;
    graded(T - 1.0, ustar);
    graded(ustar, T);
    return acc.value();
}

double GreenEvaluator::layer_g(double u) const {
    int m = (int)std::ceil(u) - 1;
    if (m < 1 || m >= max_interval_)
        throw std::logic_error("green: extension layer out of range");
    double pos = (u - m) * 1024.0 - 1.0;
    long lo = std::clamp((long)std::floor(pos) - 1, 0L, 1020L);
    double y[4];
    for (int i = 0; i < 4; ++i) y[i] = cell(m, lo + i);
    return lagrange4(y, m + (lo + 1) * cell_h, cell_h, u);
}

double GreenEvaluator::cell(int m, long j) const {
    std::atomic<double>& c = layers_[m][j];
    double v = c.load(std::memory_order_relaxed);
    if (std::isnan(v)) {
        // deterministic fill: a concurrent duplicate computes the same bits
        v = straddle(m + (j + 1) * cell_h);
        c.store(v, std::memory_order_relaxed);
    }
    return v;
}

double GreenEvaluator::value(double t) const {
    if (!(t > 0.0)) throw std::domain_error("green: t must be positive");
    if (t <= 1.0) return base(t);
    if (t > (double)max_interval_)
        throw std::domain_error("green: t beyond the max_interval extension range");
    return straddle(t);
}

double GreenEvaluator::spacetime(double c, double t, const std::vector<double>& x) const {
    return value(t) * heat_kernel(c, t, x);
}

double green_G(double theta, double t) { return GreenEvaluator(theta).base(t); }

double green_extend(double theta, double t) {
    if (t <= 1.0) return green_G(theta, t);
    int cap = std::max(8, (int)std::ceil(t));
    return GreenEvaluator(theta, 1e-10, cap).value(t);
}

double green_bar(double theta, double u) { return GreenEvaluator(theta).bar(u); }

double heat_kernel(double c, double t, const std::vector<double>& x) {
    if (!(c > 0.0)) throw std::domain_error("heat_kernel: c must be positive");
    if (!(t > 0.0)) throw std::domain_error("heat_kernel: t must be positive");
    if (x.empty()) throw std::domain_error("heat_kernel: x must be nonempty");
    double v = c * t;
    double q = 0.0;
    for (double xi : x) q += xi * xi;
    return std::pow(2.0 * pi * v, -0.5 * (double)x.size()) * std::exp(-0.5 * q / v);
}

double green_spacetime(double theta, double c, double t, const std::vector<double>& x) {
    int cap = std::max(8, (int)std::ceil(std::max(t, 1.0)));
    return GreenEvaluator(theta, 1e-10, cap).spacetime(c, t, x);
}

} // namespace dickman
