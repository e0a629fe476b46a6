#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dickman/renewal.hpp"

namespace dickman {

// Finitely supported mass function on Z^2, stored dense on the square
// [-radius, radius]^2.  Reads outside the square return exact zero.
struct LatticePmf {
  int radius = 0;
  std::vector<double> mass;  // (2 radius + 1)^2 cells, x1-major

  LatticePmf() : mass(1, 0.0) {}
  explicit LatticePmf(int r) : radius(r), mass((2 * static_cast<size_t>(r) + 1) * (2 * static_cast<size_t>(r) + 1), 0.0) {}

  long side() const { return 2L * radius + 1; }
  double& cell(long x1, long x2) {
    return mass[static_cast<size_t>((x1 + radius) * side() + (x2 + radius))];
  }
  double at(long x1, long x2) const {
    if (x1 < -radius || x1 > radius || x2 < -radius || x2 > radius) return 0.0;
    return mass[static_cast<size_t>((x1 + radius) * side() + (x2 + radius))];
  }
  double total() const;
  double second_moment() const;  // sum |x|^2 mass(x)
};

// Inter-arrival law decorated with a spatial displacement kernel per
// inter-arrival length.  Rows are built lazily through row_fn, validated on
// first use (mass 1 within 1e-14 compensated, componentwise mean within
// 1e-12 of zero, second moment at most moment_cap * m) and cached; the cache
// is not thread-safe, matching the one-writer construction discipline of the
// density builders.
//
// axis_fn, when present, gives the characteristic factor of the kernel in
// rotated coordinates: p_hat(eta) = axis(m, (eta1+eta2)/2) * axis(m, (eta1-eta2)/2).
// rotated_parity declares that the kernel row m charges only points with
// x1 + x2 = m (mod 2), which makes axis(m, xi + pi) = (-1)^m axis(m, xi) and
// lets the Fourier evaluator fold the Brillouin zone once.
class SpaceTimeLaw {
 public:
  using RowFn = std::function<LatticePmf(long)>;
  using AxisFn = std::function<double(long, double)>;

  SpaceTimeLaw(InterArrivalLaw base, RowFn row_fn, AxisFn axis_fn = nullptr,
               bool rotated_parity = false, double moment_cap = 8.0);

  const InterArrivalLaw& base() const { return base_; }
  const LatticePmf& row(long m) const;
  bool separable() const { return static_cast<bool>(axis_); }
  bool rotated_parity() const { return rotated_parity_; }
  double axis(long m, double xi) const;

 private:
  InterArrivalLaw base_;
  RowFn row_;
  AxisFn axis_;
  bool rotated_parity_;
  double moment_cap_;
  mutable std::vector<std::unique_ptr<const LatticePmf>> cache_;
};

// Harmonic inter-arrival law whose displacement over a length-m arrival is an
// m-step simple random walk on Z^2.  Rows are exact (no truncation); the walk
// factorizes over the rotated coordinates x1+x2 and x1-x2, each a 1-d simple
// walk, so the axis factor is cos(xi)^m.
SpaceTimeLaw spacetime_srw_law(int cutoff);

struct SpaceTimeDensity {
  long n_max = 0;
  std::vector<double> time_marginal;  // sum over x of each slice
  std::vector<LatticePmf> slice;      // slice[n](x) = bsU(n, x)
};

// Dense dynamic program: bsU(n,x) = lambda sum_{m<=min(n,N)} P(T=m)
// sum_z p(m,z) bsU(n-m, x-z), bsU(0,.) = delta_0.  Refuses when the summed
// slice footprint would exceed cell_budget cells.
SpaceTimeDensity spacetime_renewal_density(const SpaceTimeLaw& law,
                                           double lambda, long n_max,
                                           long cell_budget = 1L << 25);

// Single value bsU(n, x) by Fourier inversion over the rotated Brillouin
// zone, one scalar renewal DP per frequency node.  Needs a separable law
// with rotated_parity; off-sublattice queries return exact zero.  This is
// the only route that reaches n in the thousands.
double spacetime_point(const SpaceTimeLaw& law, double lambda, long n,
                       long x1, long x2);

}  // namespace dickman
