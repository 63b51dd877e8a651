#include <doctest.h>

#include <cmath>
#include <vector>

#include "qclose/rk4.hpp"

using namespace qclose;

TEST_CASE("exponential growth and decay") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  using S = std::array<double, 1>;
  const auto up = integrate_rk4<1>([](double, const S& y) { return S{y[0]}; }, S{1.0}, grid, 1e-3);
  CHECK(std::abs(up.back()[0] - std::exp(1.0)) < 1e-9);
  const auto down = integrate_rk4<1>([](double, const S& y) { return S{-y[0]}; }, S{1.0}, grid, 1e-3);
  CHECK(std::abs(down.back()[0] - std::exp(-1.0)) < 1e-9);
  CHECK(up.size() == grid.size());
}

TEST_CASE("two-component system") {
  using S = std::array<double, 2>;
  const std::vector<double> grid{0.0, 2.0};
  const auto ys = integrate_rk4<2>([](double, const S& y) { return S{1.0, -y[1]}; }, S{0.0, 1.0}, grid, 1e-3);
  CHECK(std::abs(ys.back()[0] - 2.0) < 1e-8);
  CHECK(std::abs(ys.back()[1] - std::exp(-2.0)) < 1e-8);
}

TEST_CASE("time-dependent field and fourth-order convergence") {
  using S = std::array<double, 1>;
  const std::vector<double> grid{0.0, 1.0};
  auto field = [](double t, const S&) { return S{std::cos(t)}; };
  const double e1 = std::abs(integrate_rk4<1>(field, S{0}, grid, 0.1).back()[0] - std::sin(1.0));
  const double e2 = std::abs(integrate_rk4<1>(field, S{0}, grid, 0.05).back()[0] - std::sin(1.0));
  CHECK(e1 / e2 > 12.0);
}

TEST_CASE("steps never straddle grid points") {
  using S = std::array<double, 1>;
  const std::vector<double> grid{0.0, 0.3, 1.0, 1.05};
  std::vector<double> starts;
  integrate_rk4<1>([](double, const S&) { return S{0.0}; }, S{0.0}, grid, 0.25,
                   [&](double a) { starts.push_back(a); });
  CHECK(starts == std::vector<double>{0.0, 0.3, 1.0});

  // A field that jumps at t = 0.3 is integrated exactly when the jump is on the grid
  // and the interval hook freezes the value.
  double slope = 0.0;
  const auto ys = integrate_rk4<1>([&](double, const S&) { return S{slope}; }, S{0.0}, grid, 0.07,
                                   [&](double a) { slope = a < 0.3 ? 1.0 : -2.0; });
  CHECK(ys[1][0] == doctest::Approx(0.3));
  CHECK(ys[3][0] == doctest::Approx(0.3 - 2.0 * 0.75));
}

TEST_CASE("integration errors") {
  using S = std::array<double, 1>;
  const std::vector<double> grid{0.0, 1.0};
  try {
    integrate_rk4<1>([](double t, const S&) { return S{t > 0.5 ? NAN : 1.0}; }, S{0.0}, grid, 0.1);
    FAIL("expected IntegrationError");
  } catch (const IntegrationError& e) {
    CHECK(e.time() > 0.5);
  }
  CHECK_THROWS_AS(integrate_rk4<1>([](double, const S&) { return S{1.0}; }, S{0.0}, grid, 0.0), std::invalid_argument);
  const std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(integrate_rk4<1>([](double, const S&) { return S{1.0}; }, S{0.0}, bad, 0.1), std::invalid_argument);
}
