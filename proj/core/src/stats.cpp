#include "dickman/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dickman/kahan.hpp"

namespace dickman {

namespace {

// Chi-square 0.99 quantiles, df = 1..20, standard table values.
constexpr double kChi2Upper1pct[20] = {
    6.635,  9.210,  11.345, 13.277, 15.086, 16.812, 18.475,
    20.090, 21.666, 23.209, 24.725, 26.217, 27.688, 29.141,
    30.578, 32.000, 33.409, 34.805, 36.191, 37.566};

} // namespace

double chi2_upper_1pct(int df) {
    if (df < 1 || df > 20)
        throw std::domain_error("chi2_upper_1pct: tabulated for df in [1, 20]");
    return kChi2Upper1pct[df - 1];
}

MomentSummary summarize(const std::vector<double>& xs) {
    MomentSummary ms;
    ms.count = static_cast<long>(xs.size());
    if (ms.count == 0) return ms;
    KahanSum s;
    for (double x : xs) s.add(x);
    ms.mean = s.value() / static_cast<double>(ms.count);
    if (ms.count < 2) return ms;
    KahanSum q;
    for (double x : xs) q.add((x - ms.mean) * (x - ms.mean));
    ms.variance = q.value() / static_cast<double>(ms.count - 1);
    ms.std_error = std::sqrt(ms.variance / static_cast<double>(ms.count));
    return ms;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::domain_error("ks_two_sample: both samples must be nonempty");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double ks_one_sample(std::vector<double> xs,
                     const std::function<double(double)>& cdf) {
    if (xs.empty())
        throw std::domain_error("ks_one_sample: sample must be nonempty");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

CellFit cell_fit(const std::vector<long>& observed,
                 const std::vector<double>& cell_prob) {
    if (observed.size() != cell_prob.size() || observed.size() < 2)
        throw std::domain_error("cell_fit: need matching cell vectors, >= 2 cells");
    KahanSum psum;
    long total = 0;
    for (std::size_t c = 0; c < observed.size(); ++c) {
        if (observed[c] < 0) throw std::domain_error("cell_fit: negative count");
        if (!(cell_prob[c] >= 0.0))
            throw std::domain_error("cell_fit: cell probabilities must be >= 0");
        total += observed[c];
        psum.add(cell_prob[c]);
    }
    if (std::abs(psum.value() - 1.0) > 1e-12)
        throw std::domain_error("cell_fit: cell probabilities must sum to 1");
    if (total == 0) throw std::domain_error("cell_fit: empty sample");

    CellFit fit;
    fit.within_3se = true;
    const double n = static_cast<double>(total);
    KahanSum chi2;
    for (std::size_t c = 0; c < observed.size(); ++c) {
        double p = cell_prob[c];
        double obs = static_cast<double>(observed[c]);
        if (p == 0.0) {
            if (observed[c] != 0)
                throw std::domain_error("cell_fit: count in a zero-probability cell");
            continue;
        }
        double e = n * p;
        chi2.add((obs - e) * (obs - e) / e);
        double z = (obs - e) / std::sqrt(e * (1.0 - p));
        fit.max_abs_z = std::max(fit.max_abs_z, std::abs(z));
        if (std::abs(z) > 3.0) fit.within_3se = false;
    }
    fit.chi2 = chi2.value();
    fit.df = static_cast<int>(observed.size()) - 1;
    fit.critical = chi2_upper_1pct(fit.df);
    fit.chi2_pass = fit.chi2 <= fit.critical;
    return fit;
}

} // namespace dickman
