#pragma once

#include <array>
#include <vector>

#include "qclose/profile.hpp"

namespace qclose {

/// (x1, x2): customers at the service node and in the retrial orbit.
struct StateVector {
  double x1 = 0.0;
  double x2 = 0.0;
};

using Vec2 = std::array<double, 2>;

/// Parameter values frozen at one instant.
struct Rates {
  double lambda = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double n = 1.0;
};

/// Time-varying multi-server queue with abandonment and retrials.
struct ModelSpec {
  TimeProfile lambda;
  TimeProfile mu1;
  TimeProfile mu2;
  TimeProfile beta;
  TimeProfile p;
  TimeProfile n{1.0};
  StateVector x0;
  double horizon = 1.0;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;

  /// Parameters in force at t (right-continuous). Throws std::domain_error outside [0, horizon].
  Rates rates(double t) const;

  /// Sorted union of every profile breakpoint in [0, horizon), always starting with 0.
  std::vector<double> breakpoints() const;
};

inline constexpr int kTransitionCount = 5;

/// Jump vectors l1..l5 (arrival, retrial return, service, abandon-to-orbit, abandon-and-leave).
inline constexpr std::array<std::array<int, 2>, kTransitionCount> kTransitions{{
    {1, 0},
    {1, -1},
    {-1, 0},
    {-1, 1},
    {-1, 0},
}};

/// f_i for i in 1..5. Throws std::domain_error on a bad index.
double rate_f(int i, const Rates& r, const StateVector& x);
double rate_f(int i, const ModelSpec& spec, double t, const StateVector& x);

/// All five rates at once, indexed 0..4.
std::array<double, kTransitionCount> rates_f(const Rates& r, const StateVector& x);

/// Sum of l_i f_i.
Vec2 drift_F(const Rates& r, const StateVector& x);
Vec2 drift_F(const ModelSpec& spec, double t, const StateVector& x);

}  // namespace qclose
