#include "qclose/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qclose {

namespace {

void require_nonnegative(const TimeProfile& profile, const char* name) {
  if (profile.min_value() < 0.0) throw std::invalid_argument(std::string(name) + " must be non-negative");
}

}  // namespace

void ModelSpec::validate() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be positive");
  require_nonnegative(lambda, "lambda");
  require_nonnegative(mu1, "mu1");
  require_nonnegative(mu2, "mu2");
  require_nonnegative(beta, "beta");
  if (p.min_value() < 0.0 || p.max_value() > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  for (double v : n.values()) {
    if (v < 1.0 || v != std::floor(v)) throw std::invalid_argument("n must hold integers >= 1");
  }
  if (!(x0.x1 >= 0.0) || !(x0.x2 >= 0.0) || !std::isfinite(x0.x1) || !std::isfinite(x0.x2))
    throw std::invalid_argument("initial state must be non-negative");
}

Rates ModelSpec::rates(double t) const {
  // Slack absorbs accumulated round-off in step times that land on the horizon.
  if (t > horizon * (1.0 + 1e-12) + 1e-12)
    throw std::domain_error("time " + std::to_string(t) + " beyond horizon " + std::to_string(horizon));
  return Rates{lambda(t), mu1(t), mu2(t), beta(t), p(t), n(t)};
}

std::vector<double> ModelSpec::breakpoints() const {
  std::vector<double> out{0.0};
  for (const TimeProfile* profile : {&lambda, &mu1, &mu2, &beta, &p, &n}) {
    for (double b : profile->breakpoints()) {
      if (b > 0.0 && b < horizon) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double rate_f(int i, const Rates& r, const StateVector& x) {
  const double excess = std::max(x.x1 - r.n, 0.0);
  switch (i) {
    case 1: return r.lambda;
    case 2: return r.mu2 * x.x2;
    case 3: return r.mu1 * std::min(x.x1, r.n);
    case 4: return r.beta * (1.0 - r.p) * excess;
    case 5: return r.beta * r.p * excess;
    default: throw std::domain_error("transition index must be in 1..5, got " + std::to_string(i));
  }
}

double rate_f(int i, const ModelSpec& spec, double t, const StateVector& x) {
  return rate_f(i, spec.rates(t), x);
}

std::array<double, kTransitionCount> rates_f(const Rates& r, const StateVector& x) {
  std::array<double, kTransitionCount> out{};
  for (int i = 0; i < kTransitionCount; ++i) out[i] = rate_f(i + 1, r, x);
  return out;
}

Vec2 drift_F(const Rates& r, const StateVector& x) {
  const auto f = rates_f(r, x);
  Vec2 out{0.0, 0.0};
  for (int i = 0; i < kTransitionCount; ++i) {
    out[0] += kTransitions[i][0] * f[i];
    out[1] += kTransitions[i][1] * f[i];
  }
  return out;
}

Vec2 drift_F(const ModelSpec& spec, double t, const StateVector& x) { return drift_F(spec.rates(t), x); }

}  // namespace qclose
