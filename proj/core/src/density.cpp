#include "dickman/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dickman/constants.hpp"
#include "dickman/gamma.hpp"
#include "dickman/interp.hpp"
#include "dickman/kahan.hpp"
#include "dickman/quadrature.hpp"

namespace dickman {

namespace {

void validate_h(double h) {
    if (!(h > 0.0) || h > 0.00390625) // 2^-8
        throw std::domain_error("grid step must be a power of two <= 2^-8");
    int e;
    if (std::frexp(h, &e) != 0.5)
        throw std::domain_error("grid step must be an exact power of two");
}

double closed_form(double s, double t) {
    // s t^{s-1} e^{-gamma s} / Gamma(s+1), t in (0,1]
    return std::exp(std::log(s) + (s - 1.0) * std::log(t) -
                    euler_gamma * s - log_gamma(s + 1.0));
}

// Cumulative of the closed-form region against the decay weight:
//   I1(w) = Int_0^w f_s(a) (1+a)^{-s} da,   w in [0, 1].
// Under a = b^{1/s} the integrand is C_s (1 + b^{1/s})^{-s}; expanding
// binomially and integrating term by term gives
//   I1(w) = s C_s Sum_k binom(-s, k) w^{s+k} / (s+k),
// geometric ratio w, so the series is used up to w = 1/2 and the smooth
// remaining stretch is finished with Gauss-Legendre panels.
class CumBelowOne {
public:
    CumBelowOne(double s, double c_s) : s_(s), c_s_(c_s) {
        table_[0] = series(0.5);
        filled_ = 0;
    }

    double eval(double w) const {
        if (w <= 0.0) return 0.0;
        if (w <= 0.5) return series(w);
        if (w > 1.0) throw std::domain_error("CumBelowOne: w > 1");
        // cumulative cached at 0.5 + j/64, one Gauss panel to finish
        int j = (int)std::floor((w - 0.5) * 64.0);
        if (j > 31) j = 31;
        while (filled_ < j) {
            double a = 0.5 + filled_ / 64.0;
            table_[filled_ + 1] =
                table_[filled_] +
                gauss4([this](double x) { return integrand(x); }, a, a + 1.0 / 64.0);
            ++filled_;
        }
        return table_[j] + gauss4([this](double x) { return integrand(x); },
                                  0.5 + j / 64.0, w);
    }

    double integrand(double a) const {
        return s_ * c_s_ * std::exp((s_ - 1.0) * std::log(a) - s_ * std::log1p(a));
    }

private:
    mutable double table_[33];
    mutable int filled_;
    double series(double w) const {
        double lw = std::log(w);
        double p = std::exp(s_ * lw); // w^{s+k}, advanced by *w each term
        if (p == 0.0) return 0.0;
        double b = 1.0; // binom(-s, k) with sign
        KahanSum sum;
        int settled = 0;
        for (int k = 0; k < 40000; ++k) {
            double term = b * p / (s_ + k);
            sum.add(term);
            if (std::abs(term) <= 1e-18 * (std::abs(sum.value()) + 1e-300)) {
                if (++settled == 3) break;
            } else {
                settled = 0;
            }
            b *= -(s_ + k) / (k + 1.0);
            p *= w;
        }
        return s_ * c_s_ * sum.value();
    }

    double s_, c_s_;
};

// Integral of the cubic through g[j-2..j+1] over the panel [t_{j-1}, t_j].
inline double panel4(const std::vector<double>& g, std::size_t j, double h) {
    return h / 24.0 * (-g[j - 2] + 13.0 * g[j - 1] + 13.0 * g[j] - g[j + 1]);
}

} // namespace

double mass_below_one(double s) {
    if (!(s > 0.0)) throw std::domain_error("s must be positive");
    return std::exp(-euler_gamma * s - log_gamma(s + 1.0));
}

DensityGrid::DensityGrid(double s, double h, double t_max) : s_(s), h_(h), t_max_(t_max) {
    if (!(s > 0.0)) throw std::domain_error("s must be positive");
    validate_h(h);
    if (!(t_max >= h)) throw std::domain_error("t_max must be >= h");
    if (t_max / h > 1u << 26) throw std::domain_error("grid too large");

    c_s_ = mass_below_one(s);
    idx1_ = (std::size_t)std::llround(1.0 / h);
    std::size_t n = (std::size_t)std::floor(t_max / h + 1e-9);
    val_.assign(n + 1, 0.0);

    for (std::size_t i = 1; i <= n && i <= idx1_; ++i)
        val_[i] = closed_form(s, i * h);
    if (n <= idx1_) return;

    CumBelowOne i1(s, c_s_);
    // ratio I1(w) / (C_s w^s) at the nodes of [0,1]: analytic through w = 0,
    // so later interpolation sees none of the w^s modulus of I1 itself
    rtab_.assign(idx1_ + 1, 0.0);
    rtab_[0] = 1.0;
    for (std::size_t j = 1; j <= idx1_; ++j)
        rtab_[j] = i1.eval(j * h) / (c_s_ * std::exp(s * std::log(j * h)));
    double i1_full = c_s_ * rtab_[idx1_];

    // cumulative past w = 1 in two stages: closed-form-driven Gauss panels on
    // w in (1, 2] (the integrand still carries a (w-1)^s modulus there), then
    // cubic panels over already-computed grid values for w > 2
    KahanSum i2a, i2b;
    auto f_exact = [&](double a) {
        // density at a in (1, 2], evaluated without the grid
        return s * std::exp((s - 1.0) * std::log(a)) * (c_s_ - i1.eval(a - 1.0));
    };
    auto gnode = [&](std::size_t k) {
        // integrand f(a)(1+a)^{-s} at the grid node a = k*h
        return val_[k] * std::exp(-s * std::log1p(k * h));
    };
    for (std::size_t i = idx1_ + 1; i <= n; ++i) {
        double t = i * h;
        std::size_t j = i - idx1_; // node index of w = t - 1
        double cum;
        if (j <= idx1_) {
            cum = c_s_ * std::exp(s * std::log(j * h)) * rtab_[j];
        } else if (j <= 2 * idx1_) {
            i2a.add(gauss4([&](double a) {
                return f_exact(a) * std::exp(-s * std::log1p(a));
            }, (j - 1) * h, j * h));
            cum = i1_full + i2a.value();
        } else {
            // stencil nodes j-2..j+1 all lie at least idx1_-1 behind i
            i2b.add(h / 24.0 * (-gnode(j - 2) + 13.0 * gnode(j - 1) +
                                13.0 * gnode(j) - gnode(j + 1)));
            cum = i1_full + i2a.value() + i2b.value();
        }
        double v = s * std::exp((s - 1.0) * std::log(t)) * (c_s_ - cum);
        val_[i] = v > 0.0 ? v : 0.0; // round-off floor at the far tail
    }

    // cumulative distribution at nodes past 2; on (1,2] the cdf has the
    // closed form C_s[(1+w)^s + w^s] - (1+w)^s I1(w) (integrate the decay
    // equation by parts), so the panel rule never has to cross the seam,
    // where f is merely Holder-s for s < 1
    std::size_t k2 = 2 * idx1_;
    if (n > k2) {
        cdfv_.assign(n + 1, 0.0);
        double two_s = std::exp(s * std::log(2.0));
        cdfv_[k2] = c_s_ * (two_s + 1.0) - two_s * i1_full;
        KahanSum fc;
        for (std::size_t i = k2 + 1; i <= n; ++i) {
            if (i == k2 + 1 && i + 2 <= n) // keep the stencil right of the f'' kink
                fc.add(h / 24.0 * (9.0 * val_[i - 1] + 19.0 * val_[i] -
                                   5.0 * val_[i + 1] + val_[i + 2]));
            else if (i < n)
                fc.add(panel4(val_, i, h));
            else // right edge: backward cubic
                fc.add(h / 24.0 * (val_[i - 3] - 5.0 * val_[i - 2] +
                                   19.0 * val_[i - 1] + 9.0 * val_[i]));
            cdfv_[i] = cdfv_[k2] + fc.value();
        }
    }
}

double DensityGrid::ratio_at(double w) const {
    long long j = std::llround(w / h_);
    std::size_t m = rtab_.size() - 1;
    if (j >= 0 && (std::size_t)j <= m && j * h_ == w) return rtab_[j];
    long long lo = (long long)std::floor(w / h_) - 1;
    if (lo < 0) lo = 0;
    if ((std::size_t)lo + 3 > m) lo = (long long)(m - 3);
    return lagrange4(&rtab_[lo], lo * h_, h_, w);
}

double DensityGrid::value(double t) const {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) return closed_form(s_, t);
    if (t > t_max_ + 1e-12)
        throw std::domain_error("t beyond grid extent (t_max = " + std::to_string(t_max_) + ")");
    std::size_t n = nodes();
    long long i = std::llround(t / h_);
    if (i >= 1 && (std::size_t)i <= n && i * h_ == t) return val_[i];
    if (t <= 2.0 && !rtab_.empty()) {
        // evaluate through the cumulative ratio instead of interpolating
        // grid values, which would smear the (t-1)^s modulus of the seam
        double w = t - 1.0;
        return s_ * std::exp((s_ - 1.0) * std::log1p(w)) *
               (c_s_ - c_s_ * std::exp(s_ * std::log(w)) * ratio_at(w));
    }
    std::size_t lo = (std::size_t)std::floor(t / h_);
    std::size_t start = lo > 0 ? lo - 1 : 1;
    if (start < idx1_) start = idx1_;
    if (start + 3 > n) start = n - 3;
    return lagrange4(&val_[start], start * h_, h_, t);
}

double DensityGrid::cdf(double t) const {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) return c_s_ * std::exp(s_ * std::log(t));
    if (t > t_max_ + 1e-12)
        throw std::domain_error("t beyond grid extent");
    if (t <= 2.0 || cdfv_.empty()) {
        double w = t - 1.0;
        double ws = std::exp(s_ * std::log(w));
        double vs = std::exp(s_ * std::log1p(w));
        return c_s_ * (vs + ws) - vs * c_s_ * ws * ratio_at(w);
    }
    std::size_t n = nodes();
    long long i = std::llround(t / h_);
    if (i >= 1 && (std::size_t)i <= n && i * h_ == t) return cdfv_[i];
    std::size_t lo = (std::size_t)std::floor(t / h_);
    std::size_t start = lo > 0 ? lo - 1 : 1;
    if (start < 2 * idx1_) start = 2 * idx1_;
    if (start + 3 > n) start = n - 3;
    return lagrange4(&cdfv_[start], start * h_, h_, t);
}

double DensityGrid::mass_trapezoid(double T) const {
    std::size_t n = nodes();
    std::size_t m = (std::size_t)std::floor(T / h_ + 1e-9);
    if (m > n) m = n;
    KahanSum acc;
    for (std::size_t i = 1; i + 1 <= m; ++i)
        acc.add(0.5 * h_ * (val_[i] + val_[i + 1]));
    return acc.value();
}

double density_f(double s, double t, double h) {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) {
        if (!(s > 0.0)) throw std::domain_error("s must be positive");
        validate_h(h);
        return closed_form(s, t);
    }
    if (t > default_grid_tmax)
        throw std::domain_error("t beyond supported extent");
    DensityGrid grid(s, h, std::ceil(t));
    return grid.value(t);
}

double density_f_small(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("s must be positive");
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) return closed_form(s, t);
    if (t > 2.0) throw std::domain_error("density_f_small supports t <= 2 only");
    double c = mass_below_one(s);
    CumBelowOne i1(s, c);
    return s * std::exp((s - 1.0) * std::log(t)) * (c - i1.eval(t - 1.0));
}

double cdf_F(double s, double t, double h) {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) {
        if (!(s > 0.0)) throw std::domain_error("s must be positive");
        validate_h(h);
        return mass_below_one(s) * std::exp(s * std::log(t));
    }
    if (t > default_grid_tmax)
        throw std::domain_error("t beyond supported extent");
    DensityGrid grid(s, h, std::ceil(t));
    return grid.cdf(t);
}

RhoGrid::RhoGrid(double h, double t_max) : h_(h), t_max_(t_max) {
    validate_h(h);
    if (!(t_max >= h)) throw std::domain_error("t_max must be >= h");
    if (t_max / h > 1u << 26) throw std::domain_error("grid too large");
    idx1_ = (std::size_t)std::llround(1.0 / h);
    std::size_t n = (std::size_t)std::floor(t_max / h + 1e-9);
    val_.assign(n + 1, 1.0);
    val_[0] = 1.0;
    if (n <= idx1_) return;

    // integrand rho(a-1)/a at grid nodes; the continuation rho == 1 at and
    // below 0 makes it exactly 1/a up to a = 2, smooth across the anchor.
    // The lag of idx1_ nodes means the forward stencil value is always an
    // already-computed rho node, even at k = i + 1.
    auto gnode = [&](std::size_t k) {
        return (k <= 2 * idx1_ ? 1.0 : val_[k - idx1_]) / (k * h);
    };
    // rho' jumps at 1 and the jump echoes into g at every integer a >= 2 one
    // derivative higher each time; panels whose stencil would straddle such a
    // node switch to the one-sided cubic so no panel crosses a kink
    KahanSum cum; // Int_1^t rho(a-1)/a da
    // the first unit panel integrates 1/a exactly: rho = 1 - ln t on (1,2]
    for (std::size_t i = idx1_ + 1; i <= n && i <= 2 * idx1_; ++i)
        val_[i] = 1.0 - std::log((double)i * h);
    cum.add(std::log(2.0));
    for (std::size_t i = 2 * idx1_ + 1; i <= n; ++i) {
        std::size_t r = i % idx1_;
        if (r == 0 && i >= 2 * idx1_)
            cum.add(h / 24.0 * (gnode(i - 3) - 5.0 * gnode(i - 2) +
                                19.0 * gnode(i - 1) + 9.0 * gnode(i)));
        else if (r == 1 && i > 2 * idx1_)
            cum.add(h / 24.0 * (9.0 * gnode(i - 1) + 19.0 * gnode(i) -
                                5.0 * gnode(i + 1) + gnode(i + 2)));
        else
            cum.add(h / 24.0 * (-gnode(i - 2) + 13.0 * gnode(i - 1) +
                                13.0 * gnode(i) - gnode(i + 1)));
        double v = 1.0 - cum.value();
        val_[i] = v > 0.0 ? v : 0.0;
    }
}

double RhoGrid::value(double t) const {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) return 1.0;
    if (t > t_max_ + 1e-12) throw std::domain_error("t beyond grid extent");
    std::size_t n = val_.size() - 1;
    long long i = std::llround(t / h_);
    if (i >= 1 && (std::size_t)i <= n && i * h_ == t) return val_[i];
    std::size_t lo = (std::size_t)std::floor(t / h_);
    std::size_t start = lo > 0 ? lo - 1 : 1;
    if (start < idx1_) start = idx1_;
    if (start + 3 > n) start = n - 3;
    return lagrange4(&val_[start], start * h_, h_, t);
}

double dickman_rho(double t, double h) {
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    if (t <= 1.0) {
        validate_h(h);
        return 1.0;
    }
    RhoGrid grid(h, std::ceil(t));
    return grid.value(t);
}

double density_tail_bound(double s, double T) {
    if (!(s > 0.0) || !(T > 0.0)) throw std::domain_error("s, T must be positive");
    if (T <= s) return 1.0;
    // exponential tilt: minimize exp(-x T + s * E(x)), E(x) = Sum x^k/(k k!),
    // optimal x solves (e^x - 1)/x = T/s
    double target = T / s;
    double lo = 1e-9, hi = 100.0;
    auto g = [](double x) { return x < 1e-6 ? 1.0 + 0.5 * x : std::expm1(x) / x; };
    if (g(hi) < target) return 1.0; // tilt capped; keep the trivial bound
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    KahanSum e;
    double term = x;
    for (int k = 1; k < 500; ++k) {
        e.add(term / k);
        term *= x / (k + 1);
        if (term / (k + 1) < 1e-18 * e.value()) break;
    }
    double b = std::exp(-x * T + s * e.value());
    return b < 1.0 ? b : 1.0;
}

} // namespace dickman
