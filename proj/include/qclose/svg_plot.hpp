#pragma once

#include <span>
#include <string>
#include <vector>

namespace qclose {

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

/// Minimal line chart: frame, axis ticks, one polyline per series, legend.
std::string render_line_chart(const std::string& title, std::span<const double> x,
                              const std::vector<PlotSeries>& series);

}  // namespace qclose
