#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "qclose/model.hpp"
#include "qclose/solvers.hpp"

namespace qclose {

/// Integer queue state used by the simulator.
struct Occupancy {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
  friend bool operator==(const Occupancy&, const Occupancy&) = default;
};

/// One sample path: states[k] holds on [times[k], times[k+1]). times[0] = 0 is the initial state.
struct Trajectory {
  std::vector<double> times;
  std::vector<Occupancy> states;
  std::vector<int> transitions;  ///< catalog index 1..5 of the jump into states[k], 0 for the initial state

  /// Right-continuous state at t.
  Occupancy at(double t) const;
};

/// Per-replication stream derived from (seed, replication) alone.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replication);

/// Exact path on [0, horizon]. Requires integral x0.
Trajectory simulate_one(const ModelSpec& spec, std::uint64_t seed, std::uint64_t replication = 0);

/// Central fourth-order sample moments per grid time (divisor R).
struct FourthMoments {
  double m1111 = 0.0;
  double m1122 = 0.0;
  double m2222 = 0.0;
};

/// Sample mean and covariance (divisor R - 1) of R paths at each grid time.
struct EnsembleStats {
  std::vector<double> grid;
  std::vector<Vec2> mean;
  std::vector<Cov2> cov;
  std::vector<FourthMoments> fourth;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

/// OpenMP over replications. Bit-identical to simulate_ensemble_serial for any thread count.
EnsembleStats simulate_ensemble(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                std::span<const double> grid);

/// Single-threaded reference for simulate_ensemble.
EnsembleStats simulate_ensemble_serial(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                       std::span<const double> grid);

struct StandardErrors {
  std::vector<Vec2> mean;
  std::vector<Cov2> cov;       ///< empty unless cov_available
  bool cov_available = false;  ///< false when reps < kMinRepsForCovarianceSE
};

inline constexpr std::size_t kMinRepsForCovarianceSE = 30;

/// Mean SE = sd / sqrt(R); covariance-entry SE = sqrt((m_jjkk - s_jk^2) / R).
StandardErrors standard_errors(const EnsembleStats& stats);

/// Same columns as MomentTrajectory plus se_mean_x1,se_mean_x2; first line is
/// a `# reps=<R> seed=<S>` comment.
void write_csv(std::ostream& os, const EnsembleStats& stats);
void write_csv(const std::filesystem::path& path, const EnsembleStats& stats);

}  // namespace qclose
