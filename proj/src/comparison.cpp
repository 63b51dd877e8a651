#include "qclose/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qclose/io.hpp"
#include "qclose/svg_plot.hpp"

namespace qclose {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::mean_x1: return "mean_x1";
    case Quantity::mean_x2: return "mean_x2";
    case Quantity::var_x1: return "var_x1";
    case Quantity::cov_x1x2: return "cov_x1x2";
    case Quantity::var_x2: return "var_x2";
  }
  return "?";
}

std::string to_string(Approximation a) { return a == Approximation::adjusted ? "adjusted" : "measure_zero"; }

double quantity_value(Quantity q, const Vec2& mean, const Cov2& cov) {
  switch (q) {
    case Quantity::mean_x1: return mean[0];
    case Quantity::mean_x2: return mean[1];
    case Quantity::var_x1: return cov.v11;
    case Quantity::cov_x1x2: return cov.v12;
    case Quantity::var_x2: return cov.v22;
  }
  return 0.0;
}

double relative_difference(double approx, double sim) {
  return 100.0 * (approx - sim) / std::max(std::abs(sim), kRelativeFloor);
}

double ComparisonReport::simulated(Quantity q, std::size_t g) const {
  return quantity_value(q, simulation.mean[g], simulation.cov[g]);
}

double ComparisonReport::approximated(Approximation a, Quantity q, std::size_t g) const {
  const MomentTrajectory& traj = a == Approximation::adjusted ? adjusted : measure_zero;
  return quantity_value(q, traj.mean[g], traj.cov[g]);
}

ComparisonReport run_comparison(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                const ComparisonOptions& options) {
  ComparisonReport report;
  report.adjusted = adjusted_moments(spec, options.solver);
  const MomentTrajectory fluid = classic_fluid(spec, options.solver);
  report.measure_zero = classic_diffusion(spec, options.solver, fluid);
  const auto& grid = report.adjusted.grid;
  report.simulation = simulate_ensemble(spec, reps, seed, grid);

  for (double t : options.report_times) {
    if (t < 0.0 || t > spec.horizon) continue;
    const auto it = std::lower_bound(grid.begin(), grid.end(), t - 1e-6);
    if (it == grid.end() || std::abs(*it - t) > 1e-6)
      throw std::invalid_argument("report time " + format_double(t) + " is not on the output grid");
    report.report_times.push_back(t);
    report.report_index.push_back(static_cast<std::size_t>(it - grid.begin()));
  }

  for (Approximation a : kApproximations) {
    for (Quantity q : kQuantities) {
      auto& series = report.differences[static_cast<std::size_t>(a)][static_cast<std::size_t>(q)];
      for (std::size_t g : report.report_index) {
        const double sim = report.simulated(q, g);
        const double approx = report.approximated(a, q, g);
        series.absolute.push_back(approx - sim);
        series.relative.push_back(relative_difference(approx, sim));
      }
    }
  }
  return report;
}

std::vector<std::filesystem::path> write_comparison(const ComparisonReport& report, const std::filesystem::path& dir,
                                                    const std::string& prefix) {
  std::vector<std::filesystem::path> written;
  for (Quantity q : kQuantities) {
    const auto path = dir / (prefix + "comparison_" + to_string(q) + ".csv");
    write_file_atomic(path, [&](std::ostream& os) {
      os << "t,simulation,adjusted,measure_zero,adjusted_abs,adjusted_rel,measure_zero_abs,measure_zero_rel\n";
      for (std::size_t k = 0; k < report.report_times.size(); ++k) {
        const std::size_t g = report.report_index[k];
        const auto& adj = report.diff(Approximation::adjusted, q);
        const auto& mz = report.diff(Approximation::measure_zero, q);
        write_row(os, {report.report_times[k], report.simulated(q, g), report.approximated(Approximation::adjusted, q, g),
                       report.approximated(Approximation::measure_zero, q, g), adj.absolute[k], adj.relative[k],
                       mz.absolute[k], mz.relative[k]});
      }
    });
    written.push_back(path);
  }
  written.push_back(dir / (prefix + "simulation.csv"));
  write_csv(written.back(), report.simulation);
  written.push_back(dir / (prefix + "adjusted.csv"));
  write_csv(written.back(), report.adjusted);
  written.push_back(dir / (prefix + "measure_zero.csv"));
  write_csv(written.back(), report.measure_zero);
  return written;
}

std::vector<std::filesystem::path> emit_figures(const ComparisonReport& report, int id,
                                                const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  const auto& grid = report.simulation.grid;
  for (Quantity q : kQuantities) {
    const std::string stem = "exp" + std::to_string(id) + "_" + to_string(q);
    std::vector<PlotSeries> series{{"simulation", {}}, {"adjusted", {}}, {"measure-zero", {}}};
    for (std::size_t g = 0; g < grid.size(); ++g) {
      series[0].y.push_back(report.simulated(q, g));
      series[1].y.push_back(report.approximated(Approximation::adjusted, q, g));
      series[2].y.push_back(report.approximated(Approximation::measure_zero, q, g));
    }
    const auto csv = dir / (stem + ".csv");
    write_file_atomic(csv, [&](std::ostream& os) {
      os << "t,simulation,adjusted,measure_zero\n";
      for (std::size_t g = 0; g < grid.size(); ++g) write_row(os, {grid[g], series[0].y[g], series[1].y[g], series[2].y[g]});
    });
    const auto svg = dir / (stem + ".svg");
    const std::string body = render_line_chart("Experiment " + std::to_string(id) + ": " + to_string(q), grid, series);
    write_file_atomic(svg, [&](std::ostream& os) { os << body; });
    written.push_back(csv);
    written.push_back(svg);
  }
  return written;
}

std::vector<std::filesystem::path> write_tables(const std::vector<int>& ids,
                                                const std::vector<ComparisonReport>& reports,
                                                const std::filesystem::path& dir) {
  if (ids.size() != reports.size()) throw std::invalid_argument("one report per experiment id expected");
  std::vector<std::filesystem::path> written;
  for (bool relative : {true, false}) {
    for (Quantity q : kQuantities) {
      const auto path = relative ? dir / ("table_" + to_string(q) + ".csv")
                                 : dir / "tables_abs" / ("table_" + to_string(q) + ".csv");
      write_file_atomic(path, [&](std::ostream& os) {
        os << "exp,method";
        if (!reports.empty())
          for (double t : reports.front().report_times) os << ',' << format_double(t);
        os << '\n';
        for (std::size_t e = 0; e < ids.size(); ++e) {
          for (Approximation a : kApproximations) {
            os << ids[e] << ',' << (a == Approximation::adjusted ? "proposed" : "meas0");
            const auto& series = reports[e].diff(a, q);
            for (double v : relative ? series.relative : series.absolute) os << ',' << format_double(v);
            os << '\n';
          }
        }
      });
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace qclose
