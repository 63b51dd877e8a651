#include "qclose/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "qclose/comparison.hpp"
#include "qclose/config.hpp"
#include "qclose/experiments.hpp"
#include "qclose/simulator.hpp"
#include "qclose/solvers.hpp"

namespace qclose {

namespace fs = std::filesystem;

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad experiment list '" + text + "'");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    start = comma + 1;
    if (auto dots = item.find(".."); dots != std::string::npos) {
      for (int v = to_int(item.substr(0, dots)); v <= to_int(item.substr(dots + 2)); ++v) ids.push_back(v);
    } else if (auto dash = item.find('-'); dash != std::string::npos && dash > 0) {
      for (int v = to_int(item.substr(0, dash)); v <= to_int(item.substr(dash + 1)); ++v) ids.push_back(v);
    } else {
      ids.push_back(to_int(item));
    }
  }
  if (ids.empty()) throw std::invalid_argument("empty experiment list");
  return ids;
}

namespace {

struct Options {
  std::string out;
  std::string config;
  std::optional<int> exp;
  std::size_t reps = 5000;
  std::uint64_t seed = 1;
  double grid = 0.05;
  double step = 1e-3;
  std::string method = "adjusted";
  std::string exps = "1-10";
};

ModelSpec resolve_spec(const Options& o) {
  if (o.exp) return builtin_experiment(*o.exp);
  if (o.config.empty()) throw std::invalid_argument("need a config file or --exp N");
  return load_model_spec(o.config);
}

SolverConfig solver_config(const Options& o) { return SolverConfig{o.step, o.grid}; }

void report_written(const std::vector<fs::path>& paths) {
  for (const auto& p : paths) std::cout << p.string() << '\n';
}

}  // namespace

int cli_main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("QCLOSE_OUT")) o.out = env;
  if (o.out.empty()) o.out = ".";

  CLI::App app{"Moment trajectories of time-varying multi-server queues with abandonment and retrials"};
  app.require_subcommand(1);
  app.add_option("--out", o.out, "Output directory (default: $QCLOSE_OUT or .)");

  auto* simulate = app.add_subcommand("simulate", "Ensemble mean/covariance by exact simulation");
  simulate->add_option("config", o.config, "Model config file")->required();
  simulate->add_option("--reps", o.reps, "Replications")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  simulate->add_option("--seed", o.seed, "Base seed");
  simulate->add_option("--grid", o.grid, "Sampling grid spacing")->check(CLI::PositiveNumber);

  auto* fluid = app.add_subcommand("fluid", "Classic fluid mean");
  fluid->add_option("config", o.config, "Model config file")->required();
  fluid->add_option("--step", o.step, "RK4 step")->check(CLI::PositiveNumber);
  fluid->add_option("--grid", o.grid, "Output grid spacing")->check(CLI::PositiveNumber);

  auto* diffusion = app.add_subcommand("diffusion", "Mean and covariance from a diffusion model");
  diffusion->add_option("config", o.config, "Model config file")->required();
  diffusion->add_option("--method", o.method, "classic | adjusted")->check(CLI::IsMember({"classic", "adjusted"}));
  diffusion->add_option("--step", o.step, "RK4 step")->check(CLI::PositiveNumber);
  diffusion->add_option("--grid", o.grid, "Output grid spacing")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Simulation vs adjusted vs measure-zero");
  auto* compare_cfg = compare->add_option("config", o.config, "Model config file");
  compare->add_option("--exp", o.exp, "Built-in experiment 1..10")->excludes(compare_cfg);
  compare->add_option("--reps", o.reps, "Replications")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  compare->add_option("--seed", o.seed, "Base seed");
  compare->add_option("--step", o.step, "RK4 step")->check(CLI::PositiveNumber);

  auto* tables = app.add_subcommand("tables", "Difference tables for the built-in experiments");
  tables->add_option("--exps", o.exps, "Experiment ids, e.g. 1-10 or 2,4,7");
  tables->add_option("--reps", o.reps, "Replications")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  tables->add_option("--seed", o.seed, "Base seed");

  auto* figures = app.add_subcommand("figures", "Plot-ready curves for one built-in experiment");
  figures->add_option("--exp", o.exp, "Built-in experiment 1..10")->required();
  figures->add_option("--reps", o.reps, "Replications")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  figures->add_option("--seed", o.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const fs::path out = o.out;
    if (*simulate) {
      const ModelSpec spec = resolve_spec(o);
      SolverConfig cfg = solver_config(o);
      const auto grid = make_grid(spec, cfg.output_spacing);
      const EnsembleStats stats = simulate_ensemble(spec, o.reps, o.seed, grid);
      write_csv(out / "simulation.csv", stats);
      report_written({out / "simulation.csv"});
    } else if (*fluid) {
      const MomentTrajectory traj = classic_fluid(resolve_spec(o), solver_config(o));
      write_csv(out / "fluid.csv", traj);
      report_written({out / "fluid.csv"});
    } else if (*diffusion) {
      const ModelSpec spec = resolve_spec(o);
      const SolverConfig cfg = solver_config(o);
      const MomentTrajectory traj =
          o.method == "classic" ? classic_diffusion(spec, cfg, classic_fluid(spec, cfg)) : adjusted_moments(spec, cfg);
      const fs::path path = out / ("diffusion_" + o.method + ".csv");
      write_csv(path, traj);
      report_written({path});
    } else if (*compare) {
      const ModelSpec spec = resolve_spec(o);
      ComparisonOptions opts;
      opts.solver = solver_config(o);
      const ComparisonReport report = run_comparison(spec, o.reps, o.seed, opts);
      const std::string prefix = o.exp ? "exp" + std::to_string(*o.exp) + "_" : "";
      report_written(write_comparison(report, out, prefix));
    } else if (*tables) {
      const std::vector<int> ids = parse_id_list(o.exps);
      for (int id : ids) experiment_config(id);
      std::vector<ComparisonReport> reports;
      for (int id : ids) {
        std::cerr << "experiment " << id << "...\n";
        reports.push_back(run_comparison(builtin_experiment(id), o.reps, o.seed));
      }
      report_written(write_tables(ids, reports, out));
    } else if (*figures) {
      const ComparisonReport report = run_comparison(builtin_experiment(*o.exp), o.reps, o.seed);
      report_written(emit_figures(report, *o.exp, out));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qclose
