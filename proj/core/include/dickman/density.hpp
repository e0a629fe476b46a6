#pragma once

#include <cstddef>
#include <vector>

namespace dickman {

inline constexpr double default_grid_h = 0.000244140625; // 2^-12
inline constexpr double default_grid_tmax = 16.0;

// P(Y_s <= 1) = e^{-gamma s} / Gamma(s+1).
double mass_below_one(double s);

// Marginal density of the normalized process at parameter s > 0, tabulated on
// a uniform grid t = h, 2h, ..., t_max with h an exact power of two <= 2^-8.
//
// On (0,1] the density is the closed form s t^{s-1} e^{-gamma s}/Gamma(s+1);
// past 1 it satisfies
//   f(t) = s t^{s-1} [ C_s - Int_0^{t-1} f(a) (1+a)^{-s} da ],
// which the builder marches left to right, carrying the cumulative integral
// as a running sum (O(1) work per node).
class DensityGrid {
public:
    DensityGrid(double s, double h = default_grid_h, double t_max = default_grid_tmax);

    double s() const { return s_; }
    double h() const { return h_; }
    double t_max() const { return t_max_; }
    std::size_t nodes() const { return val_.size() - 1; } // node i at t = i*h, i >= 1

    double value_at_node(std::size_t i) const { return val_[i]; }

    // Closed form for t <= 1 (independent of the grid); cubic interpolation on
    // the grid for t in (1, t_max]. Queries beyond t_max are a domain error,
    // never an extrapolation.
    double value(double t) const;

    // P(Y_s <= t): t^s * C_s for t <= 1, anchored cumulative past 1.
    double cdf(double t) const;

    // Plain trapezoid over the stored nodes in [h, min(T, t_max)].
    double mass_trapezoid(double T) const;

private:
    double ratio_at(double w) const; // I1(w) / (C_s w^s), smooth through 0

    double s_, h_, t_max_, c_s_;
    std::size_t idx1_;          // node index of t = 1
    std::vector<double> val_;   // val_[0] unused
    std::vector<double> rtab_;  // cumulative ratio at the nodes of [0,1]
    std::vector<double> cdfv_;  // F(t_i) for nodes past 2; closed form below
};

// One-off evaluations; each builds the grid it needs (t <= 1 needs none).
double density_f(double s, double t, double h = default_grid_h);
double cdf_F(double s, double t, double h = default_grid_h);

// Scalar density evaluation without any grid, valid for 0 < t <= 2 only; on
// (1, 2] the recursion integral is the series cumulative, so this is cheap
// enough to sit inside another quadrature over s.
double density_f_small(double s, double t);

// Dickman function: 1 on (0,1], then t rho'(t) + rho(t-1) = 0 integrated
// panel by panel on the same uniform-grid layout.
class RhoGrid {
public:
    explicit RhoGrid(double h = default_grid_h, double t_max = default_grid_tmax);
    double h() const { return h_; }
    double t_max() const { return t_max_; }
    double value_at_node(std::size_t i) const { return val_[i]; }
    double value(double t) const; // exactly 1 for t <= 1
private:
    double h_, t_max_;
    std::size_t idx1_;
    std::vector<double> val_;
};

double dickman_rho(double t, double h = default_grid_h);

// Grid-independent Chernoff bound on P(Y_s > T); returns 1 when T is not
// beyond the mean. Used to close mass checks without circular reference to
// the grid's own cumulative.
double density_tail_bound(double s, double T);

} // namespace dickman
