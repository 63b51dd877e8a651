#include "qclose/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qclose/closure.hpp"
#include "qclose/io.hpp"
#include "qclose/rk4.hpp"

namespace qclose {

std::string to_string(Method m) { return m == Method::classic ? "classic" : "adjusted"; }

std::vector<double> make_grid(const ModelSpec& spec, double output_spacing) {
  if (!(output_spacing > 0.0)) throw std::invalid_argument("output spacing must be positive");
  std::vector<double> grid = spec.breakpoints();
  const auto count = static_cast<std::size_t>(std::floor(spec.horizon / output_spacing + 1e-9));
  for (std::size_t k = 1; k <= count; ++k) grid.push_back(static_cast<double>(k) * output_spacing);
  grid.push_back(spec.horizon);
  std::sort(grid.begin(), grid.end());
  // Merge points closer than round-off; breakpoints win because they sort into the
  // same slot and the uniform point is dropped.
  const double tol = 1e-9 * std::max(1.0, spec.horizon);
  std::vector<double> merged;
  const auto bps = spec.breakpoints();
  for (double t : grid) {
    if (t > spec.horizon + tol) continue;
    if (!merged.empty() && t - merged.back() < tol) {
      if (std::binary_search(bps.begin(), bps.end(), t)) merged.back() = t;
      continue;
    }
    merged.push_back(t);
  }
  merged.back() = std::min(merged.back(), spec.horizon);
  if (std::abs(merged.back() - spec.horizon) < tol) merged.back() = spec.horizon;
  return merged;
}

namespace {

void check_config(const ModelSpec& spec, const SolverConfig& cfg) {
  spec.validate();
  if (!(cfg.step > 0.0)) throw std::invalid_argument("solver step must be positive");
  double shortest = spec.horizon;
  for (const TimeProfile* p : {&spec.lambda, &spec.mu1, &spec.mu2, &spec.beta, &spec.p, &spec.n})
    shortest = std::min(shortest, p->shortest_segment(spec.horizon));
  if (cfg.step > shortest) throw std::invalid_argument("solver step exceeds the shortest parameter segment");
}

using State5 = std::array<double, 5>;

// A S + S A' + B B' on the upper triangle.
void lyapunov_rhs(const Eigen::Matrix2d& A, const Eigen::Matrix2d& BB, double s11, double s12, double s22,
                  State5& dy) {
  dy[2] = 2.0 * (A(0, 0) * s11 + A(0, 1) * s12) + BB(0, 0);
  dy[3] = A(0, 0) * s12 + A(0, 1) * s22 + A(1, 0) * s11 + A(1, 1) * s12 + BB(0, 1);
  dy[4] = 2.0 * (A(1, 0) * s12 + A(1, 1) * s22) + BB(1, 1);
}

MomentTrajectory unpack(Method method, const std::vector<double>& grid, const std::vector<State5>& ys) {
  MomentTrajectory traj;
  traj.method = method;
  traj.has_covariance = true;
  traj.grid = grid;
  traj.mean.reserve(ys.size());
  traj.cov.reserve(ys.size());
  for (const auto& y : ys) {
    traj.mean.push_back({y[0], y[1]});
    traj.cov.push_back({y[2], y[3], y[4]});
  }
  return traj;
}

}  // namespace

MomentTrajectory classic_fluid(const ModelSpec& spec, const SolverConfig& cfg) {
  check_config(spec, cfg);
  const auto grid = make_grid(spec, cfg.output_spacing);
  Rates rates = spec.rates(0.0);
  auto field = [&](double, const Vec2& x) { return drift_F(rates, StateVector{x[0], x[1]}); };
  auto freeze = [&](double a) { rates = spec.rates(a); };
  const auto ys = integrate_rk4<2>(field, Vec2{spec.x0.x1, spec.x0.x2}, grid, cfg.step, freeze);

  MomentTrajectory traj;
  traj.method = Method::classic;
  traj.grid = grid;
  traj.mean = ys;
  traj.cov.assign(grid.size(), Cov2{});
  return traj;
}

MomentTrajectory classic_diffusion(const ModelSpec& spec, const SolverConfig& cfg, const MomentTrajectory& fluid) {
  check_config(spec, cfg);
  const auto grid = make_grid(spec, cfg.output_spacing);
  if (fluid.grid != grid || fluid.mean.size() != grid.size())
    throw std::invalid_argument("fluid trajectory was computed on a different grid");
  if (fluid.mean.front()[0] != spec.x0.x1 || fluid.mean.front()[1] != spec.x0.x2)
    throw std::invalid_argument("fluid trajectory does not start at the model's initial state");

  // The covariance needs the fluid at RK4 stage times, so the fluid is carried
  // along in the state. Its components never read the covariance and reproduce
  // classic_fluid step for step.
  Rates rates = spec.rates(0.0);
  auto field = [&](double, const State5& y) {
    const StateVector x{y[0], y[1]};
    const Vec2 drift = drift_F(rates, x);
    // Degenerate closure == measure-zero one-sided gradient and f at the fluid point.
    const Eigen::Matrix2d A = grad_A(rates, x, 0.0);
    const auto B = diffusion_factor(rates_f(rates, x));
    State5 dy{drift[0], drift[1], 0.0, 0.0, 0.0};
    lyapunov_rhs(A, B * B.transpose(), y[2], y[3], y[4], dy);
    return dy;
  };
  auto freeze = [&](double a) { rates = spec.rates(a); };
  const auto ys = integrate_rk4<5>(field, State5{spec.x0.x1, spec.x0.x2, 0.0, 0.0, 0.0}, grid, cfg.step, freeze);

  MomentTrajectory traj = unpack(Method::classic, grid, ys);
  traj.mean = fluid.mean;
  return traj;
}

MomentTrajectory adjusted_moments(const ModelSpec& spec, const SolverConfig& cfg) {
  check_config(spec, cfg);
  const auto grid = make_grid(spec, cfg.output_spacing);
  Rates rates = spec.rates(0.0);
  auto field = [&](double, const State5& y) {
    const StateVector z{y[0], y[1]};
    const double sigma1 = std::sqrt(std::max(y[2], 0.0));
    const ClosureEval c = evaluate_closure(rates, z, sigma1);
    State5 dy{};
    for (int i = 0; i < kTransitionCount; ++i) {
      dy[0] += kTransitions[i][0] * c.g[i];
      dy[1] += kTransitions[i][1] * c.g[i];
    }
    lyapunov_rhs(c.A, c.BBt(), y[2], y[3], y[4], dy);
    return dy;
  };
  auto freeze = [&](double a) { rates = spec.rates(a); };
  const auto ys = integrate_rk4<5>(field, State5{spec.x0.x1, spec.x0.x2, 0.0, 0.0, 0.0}, grid, cfg.step, freeze);
  return unpack(Method::adjusted, grid, ys);
}

void write_csv(std::ostream& os, const MomentTrajectory& traj) {
  os << "t,mean_x1,mean_x2,var_x1,cov_x1x2,var_x2\n";
  for (std::size_t k = 0; k < traj.grid.size(); ++k) {
    const Cov2& c = traj.cov[k];
    write_row(os, {traj.grid[k], traj.mean[k][0], traj.mean[k][1], std::max(c.v11, 0.0), c.v12, std::max(c.v22, 0.0)});
  }
}

void write_csv(const std::filesystem::path& path, const MomentTrajectory& traj) {
  write_file_atomic(path, [&](std::ostream& os) { write_csv(os, traj); });
}

}  // namespace qclose
