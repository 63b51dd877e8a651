#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclose {

/// Field evaluation produced a NaN or infinity.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(double t)
      : std::runtime_error("non-finite derivative at t = " + std::to_string(t)), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

struct NoIntervalHook {
  void operator()(double) const {}
};

/// Classical fixed-step RK4 reported on `grid`.
///
/// Each grid interval [a, b] is split into ceil((b - a) / h) equal steps, so no
/// step crosses a grid point. `on_interval(a)` runs before each interval; callers
/// that put parameter breakpoints on the grid use it to freeze segment values,
/// which keeps the stage at t = b on the left-hand segment.
template <std::size_t N, class Field, class OnInterval = NoIntervalHook>
std::vector<std::array<double, N>> integrate_rk4(Field&& field, std::array<double, N> y0, std::span<const double> grid,
                                                 double h, OnInterval&& on_interval = {}) {
  using State = std::array<double, N>;
  if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
  if (grid.empty()) throw std::invalid_argument("grid must not be empty");

  auto eval = [&](double t, const State& y) {
    State dy = field(t, y);
    for (double v : dy) {
      if (!std::isfinite(v)) throw IntegrationError(t);
    }
    return dy;
  };

  std::vector<State> out;
  out.reserve(grid.size());
  State y = y0;
  out.push_back(y);
  for (std::size_t g = 1; g < grid.size(); ++g) {
    const double a = grid[g - 1];
    const double b = grid[g];
    if (!(b > a)) throw std::invalid_argument("grid must be strictly increasing");
    on_interval(a);
    const auto steps = static_cast<std::size_t>(std::ceil((b - a) / h - 1e-9));
    const double dt = (b - a) / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
      const double t = a + static_cast<double>(s) * dt;
      State tmp;
      const State k1 = eval(t, y);
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
      const State k2 = eval(t + 0.5 * dt, tmp);
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
      const State k3 = eval(t + 0.5 * dt, tmp);
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
      const State k4 = eval(s + 1 == steps ? b : t + dt, tmp);
      for (std::size_t i = 0; i < N; ++i) y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace qclose
