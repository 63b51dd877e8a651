#include "qclose/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qclose {

TimeProfile::TimeProfile(double constant) : breakpoints_{0.0}, values_{constant} {
  if (!std::isfinite(constant)) throw std::invalid_argument("profile value must be finite");
}

TimeProfile::TimeProfile(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size())
    throw std::invalid_argument("profile needs one value per breakpoint");
  if (breakpoints_.front() != 0.0)
    throw std::invalid_argument("profile must start at t = 0");
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] > breakpoints_[k - 1]))
      throw std::invalid_argument("profile breakpoints must be strictly increasing");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("profile value must be finite");
  }
  for (double b : breakpoints_) {
    if (!std::isfinite(b)) throw std::invalid_argument("profile breakpoint must be finite");
  }
}

TimeProfile TimeProfile::alternating(double first, double second, double period, double horizon) {
  if (!(period > 0.0)) throw std::invalid_argument("alternation period must be positive");
  std::vector<double> times;
  std::vector<double> values;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * period;
    if (k > 0 && t >= horizon) break;
    times.push_back(t);
    values.push_back(k % 2 == 0 ? first : second);
  }
  return TimeProfile(std::move(times), std::move(values));
}

double TimeProfile::operator()(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::domain_error("profile evaluated outside its domain at t = " + std::to_string(t));
  // last breakpoint <= t
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double TimeProfile::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double TimeProfile::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double TimeProfile::shortest_segment(double horizon) const {
  double shortest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < breakpoints_.size() && breakpoints_[k] < horizon; ++k) {
    const double end = k + 1 < breakpoints_.size() ? std::min(breakpoints_[k + 1], horizon) : horizon;
    shortest = std::min(shortest, end - breakpoints_[k]);
  }
  return shortest;
}

std::string to_string(const TimeProfile& profile) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t k = 0; k < profile.values().size(); ++k) {
    if (k) os << ", ";
    os << profile.breakpoints()[k] << ':' << profile.values()[k];
  }
  return os.str();
}

}  // namespace qclose
