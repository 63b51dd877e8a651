#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qclose/solvers.hpp"

namespace qclose::test {

/// |second central difference| of Var[x1] at grid points 1 .. size-2.
inline std::vector<double> var_x1_second_differences(const MomentTrajectory& traj) {
  std::vector<double> d2;
  for (std::size_t k = 1; k + 1 < traj.cov.size(); ++k)
    d2.push_back(std::abs(traj.cov[k + 1].v11 - 2 * traj.cov[k].v11 + traj.cov[k - 1].v11));
  return d2;
}

inline double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

/// Largest |second central difference| of Var[x1] over the grid divided by its median.
inline double spike_ratio(const MomentTrajectory& traj) {
  const auto d2 = var_x1_second_differences(traj);
  return *std::max_element(d2.begin(), d2.end()) / median(d2);
}

/// Times where the mean of x1 crosses the level n (linear interpolation).
inline std::vector<double> crossing_times(const MomentTrajectory& traj, double n) {
  std::vector<double> out;
  for (std::size_t k = 1; k < traj.grid.size(); ++k) {
    const double a = traj.mean[k - 1][0] - n, b = traj.mean[k][0] - n;
    if (a * b < 0) out.push_back(traj.grid[k - 1] + (traj.grid[k] - traj.grid[k - 1]) * a / (a - b));
  }
  return out;
}

/// Same as spike_ratio but the maximum is taken only over stencils centred within
/// `radius` of one of `times`.
inline double spike_ratio_near(const MomentTrajectory& traj, const std::vector<double>& times, double radius) {
  const auto d2 = var_x1_second_differences(traj);
  double peak = 0.0;
  for (std::size_t k = 0; k < d2.size(); ++k) {
    const double t = traj.grid[k + 1];
    for (double c : times)
      if (std::abs(t - c) <= radius) peak = std::max(peak, d2[k]);
  }
  return peak / median(d2);
}

inline double max_abs_difference(const MomentTrajectory& a, const MomentTrajectory& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.grid.size(); ++k) {
    worst = std::max({worst, std::abs(a.mean[k][0] - b.mean[k][0]), std::abs(a.mean[k][1] - b.mean[k][1]),
                      std::abs(a.cov[k].v11 - b.cov[k].v11), std::abs(a.cov[k].v12 - b.cov[k].v12),
                      std::abs(a.cov[k].v22 - b.cov[k].v22)});
  }
  return worst;
}

}  // namespace qclose::test
