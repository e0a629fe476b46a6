#include "dickman/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dickman/constants.hpp"
#include "dickman/kahan.hpp"
#include "dickman/walk.hpp"

namespace dickman {

namespace {

constexpr double kGl8Node[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kGl8Weight[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

}  // namespace

double LatticePmf::total() const {
  KahanSum s;
  for (double v : mass) s.add(v);
  return s.value();
}

double LatticePmf::second_moment() const {
  KahanSum s;
  for (long x1 = -radius; x1 <= radius; ++x1)
    for (long x2 = -radius; x2 <= radius; ++x2)
      s.add(static_cast<double>(x1 * x1 + x2 * x2) * at(x1, x2));
  return s.value();
}

SpaceTimeLaw::SpaceTimeLaw(InterArrivalLaw base, RowFn row_fn, AxisFn axis_fn,
                           bool rotated_parity, double moment_cap)
    : base_(std::move(base)),
      row_(std::move(row_fn)),
      axis_(std::move(axis_fn)),
      rotated_parity_(rotated_parity),
      moment_cap_(moment_cap) {
  if (!row_) throw std::domain_error("space-time law needs a kernel row");
  if (moment_cap_ <= 0.0)
    throw std::domain_error("second-moment cap must be positive");
}

const LatticePmf& SpaceTimeLaw::row(long m) const {
  if (m < 1 || m > base_.cutoff)
    throw std::domain_error("kernel row index outside 1..N");
  if (cache_.size() < static_cast<size_t>(m)) cache_.resize(m);
  if (!cache_[m - 1]) {
    auto built = std::make_unique<LatticePmf>(row_(m));
    KahanSum tot, mean1, mean2;
    for (long x1 = -built->radius; x1 <= built->radius; ++x1)
      for (long x2 = -built->radius; x2 <= built->radius; ++x2) {
        double v = built->at(x1, x2);
        if (!std::isfinite(v) || v < 0.0)
          throw std::runtime_error("kernel row " + std::to_string(m) +
                                   " has a negative or non-finite mass");
        tot.add(v);
        mean1.add(x1 * v);
        mean2.add(x2 * v);
      }
    if (std::abs(tot.value() - 1.0) > 1e-14)
      throw std::runtime_error("kernel row " + std::to_string(m) +
                               " mass drifts from 1");
    if (std::abs(mean1.value()) > 1e-12 || std::abs(mean2.value()) > 1e-12)
      throw std::runtime_error("kernel row " + std::to_string(m) +
                               " is not centered");
    if (built->second_moment() > moment_cap_ * static_cast<double>(m))
      throw std::runtime_error("kernel row " + std::to_string(m) +
                               " spreads faster than the O(n) moment cap");
    cache_[m - 1] = std::move(built);
  }
  return *cache_[m - 1];
}

double SpaceTimeLaw::axis(long m, double xi) const {
  if (!axis_)
    throw std::domain_error("law has no separable characteristic factor");
  return axis_(m, xi);
}

SpaceTimeLaw spacetime_srw_law(int cutoff) {
  auto row = [](long m) {
    LatticePmf p(static_cast<int>(m));
    // rotated coordinates x1 +- x2 range over [-2m, 2m]; the walk row is
    // zero beyond [-m, m], which kills the corners of the square
    std::vector<double> w(4 * m + 1, 0.0);
    for (long a = -m; a <= m; ++a) w[a + 2 * m] = srw_point(m, a);
    KahanSum tot;
    for (long x1 = -m; x1 <= m; ++x1)
      for (long x2 = -m; x2 <= m; ++x2) {
        double v = w[x1 + x2 + 2 * m] * w[x1 - x2 + 2 * m];
        p.cell(x1, x2) = v;
        tot.add(v);
      }
    // rescale away the last-bit drift of the log-space binomials
    double t = tot.value();
    for (double& v : p.mass) v /= t;
    return p;
  };
  auto axis = [](long m, double xi) {
    return std::pow(std::cos(xi), static_cast<double>(m));
  };
  return SpaceTimeLaw(law_from_harmonic(cutoff), row, axis,
                      /*rotated_parity=*/true, /*moment_cap=*/8.0);
}

SpaceTimeDensity spacetime_renewal_density(const SpaceTimeLaw& law,
                                           double lambda, long n_max,
                                           long cell_budget) {
  if (n_max < 0) throw std::domain_error("space-time DP needs n_max >= 0");
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw std::domain_error("space-time DP needs finite lambda >= 0");
  const InterArrivalLaw& base = law.base();
  long reach_max = std::min<long>(n_max, base.cutoff);
  std::vector<int> kernel_radius(reach_max + 1, 0);
  for (long m = 1; m <= reach_max; ++m) kernel_radius[m] = law.row(m).radius;

  std::vector<int> slice_radius(n_max + 1, 0);
  long cells = 1;
  for (long n = 1; n <= n_max; ++n) {
    int r = 0;
    for (long m = 1; m <= std::min<long>(n, base.cutoff); ++m)
      r = std::max(r, slice_radius[n - m] + kernel_radius[m]);
    slice_radius[n] = r;
    long side = 2L * r + 1;
    cells += side * side;
    if (cells > cell_budget)
      throw std::length_error(
          "space-time DP footprint exceeds the cell budget");
  }

  SpaceTimeDensity out;
  out.n_max = n_max;
  out.time_marginal.assign(n_max + 1, 0.0);
  out.slice.reserve(n_max + 1);
  out.slice.emplace_back(0);
  out.slice[0].cell(0, 0) = 1.0;
  out.time_marginal[0] = 1.0;

  for (long n = 1; n <= n_max; ++n) {
    LatticePmf acc(slice_radius[n]);
    for (long m = 1; m <= std::min<long>(n, base.cutoff); ++m) {
      double w = lambda * base.prob[m];
      if (w == 0.0) continue;
      const LatticePmf& ker = law.row(m);
      const LatticePmf& src = out.slice[n - m];
      for (long y1 = -src.radius; y1 <= src.radius; ++y1)
        for (long y2 = -src.radius; y2 <= src.radius; ++y2) {
          double sv = src.at(y1, y2);
          if (sv == 0.0) continue;
          double wv = w * sv;
          for (long z1 = -ker.radius; z1 <= ker.radius; ++z1)
            for (long z2 = -ker.radius; z2 <= ker.radius; ++z2) {
              double kv = ker.at(z1, z2);
              if (kv != 0.0) acc.cell(y1 + z1, y2 + z2) += wv * kv;
            }
        }
    }
    out.time_marginal[n] = acc.total();
    out.slice.push_back(std::move(acc));
  }
  return out;
}

double spacetime_point(const SpaceTimeLaw& law, double lambda, long n,
                       long x1, long x2) {
  if (!law.separable() || !law.rotated_parity())
    throw std::domain_error(
        "Fourier route needs a separable kernel with lattice periodicity");
  if (n < 0) throw std::domain_error("spacetime_point needs n >= 0");
  if ((n + x1 + x2) % 2 != 0) return 0.0;  // off the even sublattice
  if (n == 0) return (x1 == 0 && x2 == 0) ? 1.0 : 0.0;
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw std::domain_error("spacetime_point needs finite lambda >= 0");

  for (long m = 1; m <= std::min<long>(8, law.base().cutoff); ++m) {
    if (std::abs(law.axis(m, 0.0) - 1.0) > 1e-12)
      throw std::runtime_error("axis factor is not a normalized pmf at xi=0");
  }

  // frequency nodes on [0, pi/2]; the weighted sum under the DP concentrates
  // on the scale 1/sqrt(n) around 0, so panels are graded there
  const double half_pi = 0.5 * pi;
  double sigma = 1.0 / std::sqrt(static_cast<double>(n));
  double raw_edges[7] = {0.0,          2.5 * sigma, 5.0 * sigma, 12.0 * sigma,
                         25.0 * sigma, 60.0 * sigma, half_pi};
  std::vector<double> edges;
  for (double e : raw_edges) {
    double c = std::min(e, half_pi);
    if (edges.empty() || c > edges.back() + 1e-12) edges.push_back(c);
  }
  std::vector<double> node, weight;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    double mid = 0.5 * (edges[p] + edges[p + 1]);
    double hw = 0.5 * (edges[p + 1] - edges[p]);
    for (int g = 0; g < 8; ++g) {
      node.push_back(mid + hw * kGl8Node[g]);
      weight.push_back(hw * kGl8Weight[g]);
    }
  }
  const long J = static_cast<long>(node.size());
  const long M = std::min<long>(n, law.base().cutoff);
  const std::vector<double>& prob = law.base().prob;

  // axis factor table, rows by inter-arrival length
  std::vector<double> F(static_cast<size_t>(M) * J);
  for (long m = 1; m <= M; ++m)
    for (long j = 0; j < J; ++j)
      F[static_cast<size_t>(m - 1) * J + j] = law.axis(m, node[j]);

  const double a = static_cast<double>(x1 + x2);
  const double b = static_cast<double>(x1 - x2);
  const long ring = M + 1;
  std::vector<double> hist(static_cast<size_t>(ring) * J);
  std::vector<double> B(static_cast<size_t>(M) * J);
  double outer = 0.0;

  for (long i = 0; i < J; ++i) {
    for (long m = 1; m <= M; ++m) {
      double c = lambda * prob[m] * F[static_cast<size_t>(m - 1) * J + i];
      const double* fr = &F[static_cast<size_t>(m - 1) * J];
      double* br = &B[static_cast<size_t>(m - 1) * J];
      for (long j = 0; j < J; ++j) br[j] = c * fr[j];
    }
    std::fill(hist.begin(), hist.end(), 0.0);
    for (long j = 0; j < J; ++j) hist[j] = 1.0;  // tau = 0 slice
    const double* last = &hist[0];
    for (long tau = 1; tau <= n; ++tau) {
      double* dst = &hist[static_cast<size_t>(tau % ring) * J];
      std::fill(dst, dst + J, 0.0);
      long reach = std::min(tau, M);
      for (long m = 1; m <= reach; ++m) {
        const double* src = &hist[static_cast<size_t>((tau - m) % ring) * J];
        const double* br = &B[static_cast<size_t>(m - 1) * J];
        for (long j = 0; j < J; ++j) dst[j] += br[j] * src[j];
      }
      last = dst;
    }
    double inner = 0.0;
    for (long j = 0; j < J; ++j)
      inner += weight[j] * std::cos(b * node[j]) * last[j];
    outer += weight[i] * std::cos(a * node[i]) * inner;
  }
  return outer * 4.0 / (pi * pi);
}

}  // namespace dickman
