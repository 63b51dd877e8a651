#include "qclose/closure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qclose {

double std_normal_cdf(double u) { return 0.5 * std::erfc(-u / std::numbers::sqrt2); }

double std_normal_pdf(double u) { return std::exp(-0.5 * u * u) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2); }

namespace {

void check_sigma(double sigma1) {
  if (!(sigma1 >= 0.0)) throw std::domain_error("sigma1 must be non-negative, got " + std::to_string(sigma1));
}

// Truncated moments of X ~ N(z, s^2) about the server count n.
struct Truncation {
  double below = 1.0;   // P(X <= n)
  double above = 0.0;   // P(X > n)
  double spread = 0.0;  // s * pdf((n - z) / s), i.e. s^2 * density at n
};

Truncation truncate(double z, double n, double sigma) {
  if (sigma < kSigmaFloor) {
    const bool at_or_below = z <= n;
    return {at_or_below ? 1.0 : 0.0, at_or_below ? 0.0 : 1.0, 0.0};
  }
  const double u = (n - z) / sigma;
  // Both tails from erfc so neither loses digits to cancellation.
  return {std_normal_cdf(u), std_normal_cdf(-u), sigma * std_normal_pdf(u)};
}

}  // namespace

std::array<double, kTransitionCount> g_all(const Rates& r, const StateVector& z, double sigma1) {
  check_sigma(sigma1);
  if (sigma1 < kSigmaFloor) return rates_f(r, z);
  const Truncation tr = truncate(z.x1, r.n, sigma1);
  const double d = z.x1 - r.n;
  // E[min(X, n)] and E[(X - n)^+]
  const double capped = r.n + d * tr.below - tr.spread;
  const double excess = d * tr.above + tr.spread;
  return {
      r.lambda,
      r.mu2 * z.x2,
      r.mu1 * capped,
      r.beta * (1.0 - r.p) * excess,
      r.beta * r.p * excess,
  };
}

double g_eval(int i, const Rates& r, const StateVector& z, double sigma1) {
  if (i < 1 || i > kTransitionCount)
    throw std::domain_error("transition index must be in 1..5, got " + std::to_string(i));
  return g_all(r, z, sigma1)[static_cast<std::size_t>(i - 1)];
}

double g_eval(int i, const ModelSpec& spec, double t, const StateVector& z, double sigma1) {
  return g_eval(i, spec.rates(t), z, sigma1);
}

Vec2 drift_G(const Rates& r, const StateVector& z, double sigma1) {
  const auto g = g_all(r, z, sigma1);
  Vec2 out{0.0, 0.0};
  for (int i = 0; i < kTransitionCount; ++i) {
    out[0] += kTransitions[i][0] * g[i];
    out[1] += kTransitions[i][1] * g[i];
  }
  return out;
}

Vec2 drift_G(const ModelSpec& spec, double t, const StateVector& z, double sigma1) {
  return drift_G(spec.rates(t), z, sigma1);
}

Eigen::Matrix2d grad_A(const Rates& r, const StateVector& z, double sigma1) {
  check_sigma(sigma1);
  // d/dz E[min(X, n)] = P(X <= n), d/dz E[(X - n)^+] = P(X > n)
  const Truncation tr = truncate(z.x1, r.n, sigma1);
  Eigen::Matrix2d A;
  A(0, 0) = -r.mu1 * tr.below - r.beta * tr.above;
  A(0, 1) = r.mu2;
  A(1, 0) = r.beta * (1.0 - r.p) * tr.above;
  A(1, 1) = -r.mu2;
  return A;
}

Eigen::Matrix2d grad_A(const ModelSpec& spec, double t, const StateVector& z, double sigma1) {
  return grad_A(spec.rates(t), z, sigma1);
}

Eigen::Matrix<double, 2, kTransitionCount> diffusion_factor(const std::array<double, kTransitionCount>& rates) {
  Eigen::Matrix<double, 2, kTransitionCount> B;
  for (int i = 0; i < kTransitionCount; ++i) {
    const double s = std::sqrt(std::max(rates[i], 0.0));
    B(0, i) = kTransitions[i][0] * s;
    B(1, i) = kTransitions[i][1] * s;
  }
  return B;
}

Eigen::Matrix<double, 2, kTransitionCount> diffusion_B(const Rates& r, const StateVector& z, double sigma1) {
  return diffusion_factor(g_all(r, z, sigma1));
}

ClosureEval evaluate_closure(const Rates& r, const StateVector& z, double sigma1) {
  ClosureEval out;
  out.g = g_all(r, z, sigma1);
  out.A = grad_A(r, z, sigma1);
  out.B = diffusion_factor(out.g);
  return out;
}

}  // namespace qclose
