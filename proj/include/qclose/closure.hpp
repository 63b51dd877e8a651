#pragma once

#include <array>

#include <Eigen/Dense>

#include "qclose/model.hpp"

namespace qclose {

/// Standard normal CDF and PDF.
double std_normal_cdf(double u);
double std_normal_pdf(double u);

/// Below this standard deviation the Gaussian is treated as a point mass.
inline constexpr double kSigmaFloor = 1e-6;

/// Normal marginal of x1 used by the closure.
struct GaussianMarginal {
  double mean = 0.0;
  double sigma = 0.0;
};

/// Closed rates g, drift gradient A and diffusion factor B at one instant.
struct ClosureEval {
  std::array<double, kTransitionCount> g{};
  Eigen::Matrix2d A = Eigen::Matrix2d::Zero();
  Eigen::Matrix<double, 2, kTransitionCount> B = Eigen::Matrix<double, 2, kTransitionCount>::Zero();

  /// B B' = sum_i g_i l_i l_i'.
  Eigen::Matrix2d BBt() const { return B * B.transpose(); }
};

/// E[f_i(t, X)] with X1 ~ N(z1, sigma1^2) and X2 at its mean z2 (f depends on x2 linearly).
/// Falls back to f_i(t, z) when sigma1 < kSigmaFloor. Throws std::domain_error if sigma1 < 0.
double g_eval(int i, const Rates& r, const StateVector& z, double sigma1);
double g_eval(int i, const ModelSpec& spec, double t, const StateVector& z, double sigma1);

std::array<double, kTransitionCount> g_all(const Rates& r, const StateVector& z, double sigma1);

Vec2 drift_G(const Rates& r, const StateVector& z, double sigma1);
Vec2 drift_G(const ModelSpec& spec, double t, const StateVector& z, double sigma1);

/// Analytic d G / d z at fixed sigma1.
Eigen::Matrix2d grad_A(const Rates& r, const StateVector& z, double sigma1);
Eigen::Matrix2d grad_A(const ModelSpec& spec, double t, const StateVector& z, double sigma1);

/// Column i is l_i sqrt(max(rates[i], 0)).
Eigen::Matrix<double, 2, kTransitionCount> diffusion_factor(const std::array<double, kTransitionCount>& rates);
Eigen::Matrix<double, 2, kTransitionCount> diffusion_B(const Rates& r, const StateVector& z, double sigma1);

/// g, A and B in one pass.
ClosureEval evaluate_closure(const Rates& r, const StateVector& z, double sigma1);

}  // namespace qclose
