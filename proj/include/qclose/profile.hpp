#pragma once

#include <span>
#include <string>
#include <vector>

namespace qclose {

/// Step function of time. Segment k covers [breakpoints[k], breakpoints[k+1]),
/// the last segment extends to infinity. Right-continuous at breakpoints.
class TimeProfile {
 public:
  TimeProfile() : TimeProfile(0.0) {}
  explicit TimeProfile(double constant);
  TimeProfile(std::vector<double> breakpoints, std::vector<double> values);

  /// Alternates between `first` and `second` every `period` time units on [0, horizon).
  static TimeProfile alternating(double first, double second, double period, double horizon);

  /// Value of the segment covering t. Throws std::domain_error for t < 0 or non-finite t.
  double operator()(double t) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  bool is_constant() const { return values_.size() == 1; }

  double min_value() const;
  double max_value() const;

  /// Shortest segment length among segments starting before `horizon`.
  double shortest_segment(double horizon) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

std::string to_string(const TimeProfile& profile);

}  // namespace qclose
