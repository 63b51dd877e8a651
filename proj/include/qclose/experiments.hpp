#pragma once

#include <array>
#include <optional>

#include "qclose/model.hpp"

namespace qclose {

/// One row of the built-in experiment table.
struct ExperimentConfig {
  int id = 0;
  int servers = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double alternation = 0.0;
  double horizon = 0.0;
};

inline constexpr int kExperimentCount = 10;

// clang-format off
inline constexpr std::array<ExperimentConfig, kExperimentCount> kExperiments{{
    // id svrs  lam1  lam2  mu1  mu2  beta   p   alter time
    {1,   50,   40,   80,   1, 0.2, 2.0, 0.5, 2, 20},
    {2,   50,   40,   60,   1, 0.2, 2.0, 0.5, 2, 20},
    {3,  100,   80,  120,   1, 0.2, 2.0, 0.7, 2, 20},
    {4,  100,   90,  110,   1, 0.2, 2.0, 0.7, 2, 20},
    {5,   50,   40,   80,   1, 0.2, 1.5, 0.7, 2, 20},
    {6,   50,   40,   60,   1, 0.2, 1.5, 0.7, 2, 20},
    {7,   50,   45,   55,   1, 0.2, 2.0, 0.5, 2, 20},
    {8,  100,   95,  105,   1, 0.2, 2.0, 0.5, 2, 20},
    {9,  150,  140,  160,   1, 0.2, 2.0, 0.5, 2, 20},
    {10, 150,  100,  190,   1, 0.2, 2.0, 0.5, 2, 20},
}};
// clang-format on

/// Experiments where the fluid lingers near the server count.
inline constexpr std::array<int, 6> kLingeringExperiments{2, 4, 6, 7, 8, 9};

/// Throws std::out_of_range unless 1 <= id <= 10.
const ExperimentConfig& experiment_config(int id);

/// Lambda alternates lambda1, lambda2, ... every `alternation` units; other rates
/// constant. Default x0 = (round(0.8 * servers), 0).
ModelSpec builtin_experiment(int id, std::optional<StateVector> x0 = std::nullopt);

}  // namespace qclose
