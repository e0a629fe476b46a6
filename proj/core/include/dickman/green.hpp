#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

namespace dickman {

// Exponentially weighted continuum renewal density
//   G_theta(t) = Int_0^inf e^{(theta-gamma)s} s t^{s-1} / Gamma(s+1) ds
// on (0,1], together with its integrated version
//   Gbar_theta(u) = Int_0^u G_theta = Int_0^inf e^{(theta-gamma)s} u^s / Gamma(s+1) ds
// and the extension past t = 1 through the straddle identity: with T = ceil(t)-1,
//   G(t) = Int_{T-1}^{T} G(u) J(u) du,
//   J(u) = Int_{max(0, t-u-1)}^{t-T} G(x) / ((t-u) - x) dx.
//
// The double integral needs G accurately far into its 1/(t log^2(1/t))
// blow-up near 0: the mass of G below u is only ~ 1/log(1/u), and near the
// integer seams that slowly vanishing mass is multiplied by the log-divergent
// 1/(v-u) factor, so the evaluator keeps ratio tables of G and Gbar against
// their leading small-t forms down to 2^-56 and grades every panel family
// geometrically into its endpoint.
//
// Each unit interval (m, m+1] of the extension is memoized on a 2^-10 grid;
// the cells are write-once and fills are idempotent, so concurrent readers
// are safe. Everything else is immutable after construction.
class GreenEvaluator {
public:
    explicit GreenEvaluator(double theta, double quad_tol = 1e-10, int max_interval = 8);

    GreenEvaluator(const GreenEvaluator&) = delete;
    GreenEvaluator& operator=(const GreenEvaluator&) = delete;

    double theta() const { return theta_; }
    double quad_tol() const { return quad_tol_; }
    int max_interval() const { return max_interval_; }

    // direct quadrature on (0,1]; throws for t outside
    double base(double t) const;
    // integrated density on (0,1]
    double bar(double u) const;
    // G_theta anywhere in (0, max_interval]
    double value(double t) const;
    // the straddle double integral itself, 1 < t <= max_interval
    double straddle(double t) const;

    // G_theta(t) g_{ct}(x)
    double spacetime(double c, double t, const std::vector<double>& x) const;

private:
    void build_tables() const;
    double table_g(double u) const;    // G on (0,1] through the cached tables
    double bar_small(double u) const;  // Gbar for u < 1/8 through the ratio table
    double layer_g(double u) const;    // G on (1, max_interval-1] through the memo layers
    double cell(int m, long j) const;
    double j_inner(double t, double big_t, double u) const;

    double theta_;
    double quad_tol_;
    int max_interval_;

    mutable std::once_flag tables_once_;
    mutable std::vector<double> bulk_; // G at u = 1/8 + j 2^-10, j = 0..896
    mutable std::vector<double> grat_; // G u ln^2(1/u)   at log2(1/u) = 3 + j/16
    mutable std::vector<double> brat_; // Gbar ln(1/u)    at the same nodes
    mutable std::vector<std::unique_ptr<std::atomic<double>[]>> layers_;
};

// One-off evaluations; each builds the evaluator it needs.
double green_G(double theta, double t);       // t in (0,1]
double green_extend(double theta, double t);  // any t > 0; delegates below 1
double green_bar(double theta, double u);     // u in (0,1]

// g_{ct}(x) = (2 pi c t)^{-d/2} exp(-|x|^2 / (2 c t)), d = x.size()
double heat_kernel(double c, double t, const std::vector<double>& x);

// G_theta(t) g_{ct}(x)
double green_spacetime(double theta, double c, double t, const std::vector<double>& x);

} // namespace dickman
