#pragma once

#include <functional>
#include <vector>

namespace dickman {

// Critical-value constants below are copied from standard published tables;
// nothing in this library derives them.

// Smirnov coefficient c(alpha) for D_crit = c(alpha) sqrt((n+m)/(n m))
// (two-sample) or c(alpha)/sqrt(n) (one-sample, asymptotic).
inline constexpr double ks_coeff_1pct = 1.628;
inline constexpr double ks_coeff_5pct = 1.358;

// Upper 1% point of the chi-square distribution, df in [1, 20].
double chi2_upper_1pct(int df);

struct MomentSummary {
    long count = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased, 0 for count < 2
    double std_error = 0.0;  // sqrt(variance / count)
};

MomentSummary summarize(const std::vector<double>& xs);

// sup_x |F_a(x) - F_b(x)| over the pooled points; inputs are copied and
// sorted internally.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// sup_x |F_n(x) - F(x)| against a model cdf, evaluated at the sample points
// from both sides of each step.
double ks_one_sample(std::vector<double> xs,
                     const std::function<double(double)>& cdf);

struct CellFit {
    double chi2 = 0.0;
    int df = 0;              // cells - 1
    double critical = 0.0;   // chi-square upper 1% point at df
    double max_abs_z = 0.0;  // worst per-cell (obs - np) / sqrt(np(1-p))
    bool within_3se = false; // every cell within 3 standard errors
    bool chi2_pass = false;
};

// Multinomial goodness of fit: observed counts per cell against cell
// probabilities summing to 1 within 1e-12. Zero-probability cells must
// have zero counts.
CellFit cell_fit(const std::vector<long>& observed,
                 const std::vector<double>& cell_prob);

} // namespace dickman
