#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qclose/model.hpp"
#include "qclose/simulator.hpp"
#include "qclose/solvers.hpp"

namespace qclose {

enum class Quantity { mean_x1, mean_x2, var_x1, cov_x1x2, var_x2 };
inline constexpr std::array<Quantity, 5> kQuantities{Quantity::mean_x1, Quantity::mean_x2, Quantity::var_x1,
                                                     Quantity::cov_x1x2, Quantity::var_x2};
std::string to_string(Quantity q);

double quantity_value(Quantity q, const Vec2& mean, const Cov2& cov);

/// Approximation methods compared against simulation.
enum class Approximation { adjusted, measure_zero };
inline constexpr std::array<Approximation, 2> kApproximations{Approximation::adjusted, Approximation::measure_zero};
std::string to_string(Approximation a);

/// Guards relative differences against near-zero simulation values.
inline constexpr double kRelativeFloor = 1.0;

/// 100 * (approx - sim) / max(|sim|, kRelativeFloor)
double relative_difference(double approx, double sim);

struct ComparisonOptions {
  SolverConfig solver;
  std::vector<double> report_times{6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
};

/// Differences of each approximation from simulation at the report times, plus
/// the full curves they were taken from.
struct ComparisonReport {
  std::vector<double> report_times;
  std::vector<std::size_t> report_index;  ///< grid index of each report time

  EnsembleStats simulation;
  MomentTrajectory adjusted;
  MomentTrajectory measure_zero;

  struct Series {
    std::vector<double> absolute;
    std::vector<double> relative;
  };
  /// differences[approximation][quantity]
  std::array<std::array<Series, 5>, 2> differences;

  const Series& diff(Approximation a, Quantity q) const {
    return differences[static_cast<std::size_t>(a)][static_cast<std::size_t>(q)];
  }
  std::size_t grid_size() const { return simulation.grid.size(); }
  double simulated(Quantity q, std::size_t g) const;
  double approximated(Approximation a, Quantity q, std::size_t g) const;
};

/// Simulation, measure-zero fluid/diffusion and the adjusted closure on one shared grid.
/// Report times outside [0, horizon] are dropped.
ComparisonReport run_comparison(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                const ComparisonOptions& options = {});

/// comparison_<quantity>.csv with the report-time differences, and the three full curves
/// as simulation.csv, adjusted.csv, measure_zero.csv. Returns the paths written.
std::vector<std::filesystem::path> write_comparison(const ComparisonReport& report, const std::filesystem::path& dir,
                                                    const std::string& prefix = "");

/// exp<id>_<quantity>.csv and .svg per quantity: simulation, adjusted and measure-zero
/// curves side by side. Returns the paths written.
std::vector<std::filesystem::path> emit_figures(const ComparisonReport& report, int id,
                                                const std::filesystem::path& dir);

/// table_<quantity>.csv (relative differences, %) and tables_abs/table_<quantity>.csv
/// (absolute): rows exp x {proposed, meas0}, columns the report times.
std::vector<std::filesystem::path> write_tables(const std::vector<int>& ids,
                                                const std::vector<ComparisonReport>& reports,
                                                const std::filesystem::path& dir);

}  // namespace qclose
