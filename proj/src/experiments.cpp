#include "qclose/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qclose {

const ExperimentConfig& experiment_config(int id) {
  if (id < 1 || id > kExperimentCount)
    throw std::out_of_range("experiment id must be in 1.." + std::to_string(kExperimentCount) + ", got " +
                            std::to_string(id));
  return kExperiments[static_cast<std::size_t>(id - 1)];
}

ModelSpec builtin_experiment(int id, std::optional<StateVector> x0) {
  const ExperimentConfig& e = experiment_config(id);
  ModelSpec spec;
  spec.lambda = TimeProfile::alternating(e.lambda1, e.lambda2, e.alternation, e.horizon);
  spec.mu1 = TimeProfile(e.mu1);
  spec.mu2 = TimeProfile(e.mu2);
  spec.beta = TimeProfile(e.beta);
  spec.p = TimeProfile(e.p);
  spec.n = TimeProfile(static_cast<double>(e.servers));
  spec.x0 = x0.value_or(StateVector{std::round(0.8 * e.servers), 0.0});
  spec.horizon = e.horizon;
  spec.validate();
  return spec;
}

}  // namespace qclose
