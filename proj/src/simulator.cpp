#include "qclose/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qclose/io.hpp"

namespace qclose {

Occupancy Trajectory::at(double t) const {
  auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) throw std::domain_error("trajectory queried before t = 0");
  return states[static_cast<std::size_t>(it - times.begin()) - 1];
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on the open interval (0, 1); avoids the distribution objects, whose
// output is not specified bit-for-bit by the standard.
double uniform_open(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

void check_inputs(const ModelSpec& spec) {
  spec.validate();
  if (spec.x0.x1 != std::floor(spec.x0.x1) || spec.x0.x2 != std::floor(spec.x0.x2))
    throw std::invalid_argument("simulation needs an integral initial state");
}

// Runs one path. hold(a, b, x): x is the state on [a, b). jump(t, x, i): x entered at t via l_i.
template <class Hold, class Jump>
void run_path(const ModelSpec& spec, const std::vector<double>& segments, std::mt19937_64& gen, Hold&& hold,
              Jump&& jump) {
  Occupancy x{static_cast<std::int64_t>(spec.x0.x1), static_cast<std::int64_t>(spec.x0.x2)};
  double t = 0.0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const double seg_end = k + 1 < segments.size() ? segments[k + 1] : spec.horizon;
    const Rates r = spec.rates(segments[k]);
    while (true) {
      const auto f = rates_f(r, StateVector{static_cast<double>(x.x1), static_cast<double>(x.x2)});
      double total = 0.0;
      for (double v : f) total += v;
      // Memorylessness lets a draw that overshoots the segment be discarded.
      const double wait = total > 0.0 ? -std::log(uniform_open(gen)) / total : INFINITY;
      if (t + wait >= seg_end) {
        hold(t, seg_end, x);
        t = seg_end;
        break;
      }
      hold(t, t + wait, x);
      t += wait;
      double pick = uniform_open(gen) * total;
      int i = 0;
      while (i < kTransitionCount - 1 && (pick >= f[i] || f[i] <= 0.0)) {
        pick -= f[i];
        ++i;
      }
      // Round-off can leave pick past the last positive rate; fall back to it.
      while (f[i] <= 0.0) --i;
      x.x1 += kTransitions[i][0];
      x.x2 += kTransitions[i][1];
      jump(t, x, i + 1);
    }
  }
}

void check_grid(const ModelSpec& spec, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("sampling grid must not be empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k] < 0.0 || grid[k] > spec.horizon) throw std::invalid_argument("sampling grid leaves [0, horizon]");
    if (k && !(grid[k] > grid[k - 1])) throw std::invalid_argument("sampling grid must be strictly increasing");
  }
}

// Fills samples[2 * g], samples[2 * g + 1] with the right-continuous state at grid[g].
void sample_path(const ModelSpec& spec, const std::vector<double>& segments, std::span<const double> grid,
                 std::uint64_t seed, std::uint64_t rep, double* samples) {
  std::mt19937_64 gen(stream_seed(seed, rep));
  std::size_t next = 0;
  Occupancy last{};
  auto hold = [&](double, double b, const Occupancy& x) {
    while (next < grid.size() && grid[next] < b) {
      samples[2 * next] = static_cast<double>(x.x1);
      samples[2 * next + 1] = static_cast<double>(x.x2);
      ++next;
    }
    last = x;
  };
  run_path(spec, segments, gen, hold, [](double, const Occupancy&, int) {});
  for (; next < grid.size(); ++next) {  // grid points at the horizon
    samples[2 * next] = static_cast<double>(last.x1);
    samples[2 * next + 1] = static_cast<double>(last.x2);
  }
}

// Two-pass moments per grid point, summing replications in index order.
EnsembleStats reduce_samples(std::span<const double> grid, std::size_t reps, std::uint64_t seed,
                             const std::vector<double>& samples) {
  const std::size_t G = grid.size();
  EnsembleStats stats;
  stats.grid.assign(grid.begin(), grid.end());
  stats.mean.resize(G);
  stats.cov.resize(G);
  stats.fourth.resize(G);
  stats.reps = reps;
  stats.seed = seed;
  const auto R = static_cast<double>(reps);
  const auto signed_G = static_cast<std::ptrdiff_t>(G);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t gi = 0; gi < signed_G; ++gi) {
    const auto g = static_cast<std::size_t>(gi);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      s1 += samples[(r * G + g) * 2];
      s2 += samples[(r * G + g) * 2 + 1];
    }
    const double m1 = s1 / R, m2 = s2 / R;
    double c11 = 0.0, c12 = 0.0, c22 = 0.0, q1111 = 0.0, q1122 = 0.0, q2222 = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      const double d1 = samples[(r * G + g) * 2] - m1;
      const double d2 = samples[(r * G + g) * 2 + 1] - m2;
      c11 += d1 * d1;
      c12 += d1 * d2;
      c22 += d2 * d2;
      q1111 += d1 * d1 * d1 * d1;
      q1122 += d1 * d1 * d2 * d2;
      q2222 += d2 * d2 * d2 * d2;
    }
    stats.mean[g] = {m1, m2};
    stats.cov[g] = {c11 / (R - 1.0), c12 / (R - 1.0), c22 / (R - 1.0)};
    stats.fourth[g] = {q1111 / R, q1122 / R, q2222 / R};
  }
  return stats;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replication) {
  return splitmix64(splitmix64(seed) ^ splitmix64(replication + 0x632be59bd9b4e019ULL));
}

Trajectory simulate_one(const ModelSpec& spec, std::uint64_t seed, std::uint64_t replication) {
  check_inputs(spec);
  std::mt19937_64 gen(stream_seed(seed, replication));
  Trajectory path;
  path.times.push_back(0.0);
  path.states.push_back({static_cast<std::int64_t>(spec.x0.x1), static_cast<std::int64_t>(spec.x0.x2)});
  path.transitions.push_back(0);
  run_path(
      spec, spec.breakpoints(), gen, [](double, double, const Occupancy&) {},
      [&](double t, const Occupancy& x, int i) {
        path.times.push_back(t);
        path.states.push_back(x);
        path.transitions.push_back(i);
      });
  return path;
}

EnsembleStats simulate_ensemble_serial(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                       std::span<const double> grid) {
  check_inputs(spec);
  check_grid(spec, grid);
  if (reps < 2) throw std::invalid_argument("ensemble needs at least 2 replications");
  const auto segments = spec.breakpoints();
  std::vector<double> samples(reps * grid.size() * 2);
  for (std::size_t r = 0; r < reps; ++r) sample_path(spec, segments, grid, seed, r, &samples[r * grid.size() * 2]);
  return reduce_samples(grid, reps, seed, samples);
}

EnsembleStats simulate_ensemble(const ModelSpec& spec, std::size_t reps, std::uint64_t seed,
                                std::span<const double> grid) {
  check_inputs(spec);
  check_grid(spec, grid);
  if (reps < 2) throw std::invalid_argument("ensemble needs at least 2 replications");
  const auto segments = spec.breakpoints();
  std::vector<double> samples(reps * grid.size() * 2);
  const auto signed_reps = static_cast<std::ptrdiff_t>(reps);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t r = 0; r < signed_reps; ++r) {
    const auto rep = static_cast<std::size_t>(r);
    sample_path(spec, segments, grid, seed, rep, &samples[rep * grid.size() * 2]);
  }
  return reduce_samples(grid, reps, seed, samples);
}

StandardErrors standard_errors(const EnsembleStats& stats) {
  StandardErrors se;
  const auto R = static_cast<double>(stats.reps);
  se.mean.reserve(stats.grid.size());
  for (const Cov2& c : stats.cov) se.mean.push_back({std::sqrt(std::max(c.v11, 0.0) / R), std::sqrt(std::max(c.v22, 0.0) / R)});
  se.cov_available = stats.reps >= kMinRepsForCovarianceSE;
  if (!se.cov_available) return se;
  se.cov.reserve(stats.grid.size());
  for (std::size_t g = 0; g < stats.grid.size(); ++g) {
    const Cov2& c = stats.cov[g];
    const FourthMoments& m = stats.fourth[g];
    se.cov.push_back({std::sqrt(std::max(m.m1111 - c.v11 * c.v11, 0.0) / R),
                      std::sqrt(std::max(m.m1122 - c.v12 * c.v12, 0.0) / R),
                      std::sqrt(std::max(m.m2222 - c.v22 * c.v22, 0.0) / R)});
  }
  return se;
}

void write_csv(std::ostream& os, const EnsembleStats& stats) {
  const StandardErrors se = standard_errors(stats);
  os << "# reps=" << stats.reps << " seed=" << stats.seed << '\n';
  os << "t,mean_x1,mean_x2,var_x1,cov_x1x2,var_x2,se_mean_x1,se_mean_x2\n";
  for (std::size_t g = 0; g < stats.grid.size(); ++g) {
    const Cov2& c = stats.cov[g];
    write_row(os, {stats.grid[g], stats.mean[g][0], stats.mean[g][1], c.v11, c.v12, c.v22, se.mean[g][0], se.mean[g][1]});
  }
}

void write_csv(const std::filesystem::path& path, const EnsembleStats& stats) {
  write_file_atomic(path, [&](std::ostream& os) { write_csv(os, stats); });
}

}  // namespace qclose
