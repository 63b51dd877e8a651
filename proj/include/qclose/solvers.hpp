#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qclose/model.hpp"

namespace qclose {

/// Upper triangle of a symmetric 2x2 covariance.
struct Cov2 {
  double v11 = 0.0;
  double v12 = 0.0;
  double v22 = 0.0;
};

enum class Method { classic, adjusted };

std::string to_string(Method m);

struct SolverConfig {
  double step = 1e-3;
  double output_spacing = 0.05;
};

/// Mean and covariance of (x1, x2) on a time grid.
struct MomentTrajectory {
  Method method = Method::classic;
  bool has_covariance = false;
  std::vector<double> grid;
  std::vector<Vec2> mean;
  std::vector<Cov2> cov;
};

/// Uniform points k * spacing on [0, horizon] merged with every parameter breakpoint.
std::vector<double> make_grid(const ModelSpec& spec, double output_spacing);

/// dX/dt = F(t, X), X(0) = x0.
MomentTrajectory classic_fluid(const ModelSpec& spec, const SolverConfig& cfg = {});

/// Lyapunov covariance around `fluid` with one-sided gradients: the service branch is
/// active iff x1 <= n, abandonment iff x1 > n. Throws std::invalid_argument if `fluid`
/// was not produced for this spec and grid.
MomentTrajectory classic_diffusion(const ModelSpec& spec, const SolverConfig& cfg, const MomentTrajectory& fluid);

/// Coupled Gaussian-closure mean and covariance, Z(0) = x0, Sigma(0) = 0.
MomentTrajectory adjusted_moments(const ModelSpec& spec, const SolverConfig& cfg = {});

/// CSV: t,mean_x1,mean_x2,var_x1,cov_x1x2,var_x2 with 17 significant digits.
/// Diagonal entries are clamped at zero on output.
void write_csv(std::ostream& os, const MomentTrajectory& traj);
void write_csv(const std::filesystem::path& path, const MomentTrajectory& traj);

}  // namespace qclose
