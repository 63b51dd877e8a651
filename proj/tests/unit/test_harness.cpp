#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qclose/cli.hpp"
#include "qclose/comparison.hpp"
#include "qclose/experiments.hpp"

using namespace qclose;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qclose_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("built-in experiments") {
  const ModelSpec spec = builtin_experiment(7);
  CHECK(spec.n(0) == 50);
  CHECK(spec.lambda(0) == 45);
  CHECK(spec.lambda(2) == 55);
  CHECK(spec.lambda(3.999) == 55);
  CHECK(spec.lambda(4) == 45);
  CHECK(spec.beta(10) == 2);
  CHECK(spec.p(10) == 0.5);
  CHECK(spec.horizon == 20);
  CHECK(spec.x0.x1 == 40);
  CHECK(spec.x0.x2 == 0);

  const ModelSpec ten = builtin_experiment(10, StateVector{150, 5});
  CHECK(ten.lambda(1) == 100);
  CHECK(ten.lambda(3) == 190);
  CHECK(ten.x0.x1 == 150);
  CHECK(ten.x0.x2 == 5);
  CHECK(builtin_experiment(3).x0.x1 == 80);

  CHECK_THROWS_AS(builtin_experiment(0), std::out_of_range);
  CHECK_THROWS_AS(experiment_config(11), std::out_of_range);
  for (int id = 1; id <= kExperimentCount; ++id) CHECK_NOTHROW(builtin_experiment(id).validate());
}

TEST_CASE("relative difference") {
  CHECK(relative_difference(11, 10) == doctest::Approx(10));
  CHECK(relative_difference(9, -10) == doctest::Approx(190));
  CHECK(relative_difference(0.5, 0) == doctest::Approx(50));
  CHECK(relative_difference(0.2, 0.1) == doctest::Approx(10));
}

TEST_CASE("empty system compares to zero everywhere") {
  ModelSpec spec = builtin_experiment(7, StateVector{0, 0});
  spec.lambda = TimeProfile(0.0);
  const auto report = run_comparison(spec, 20, 1);
  CHECK(report.report_times.size() == 10);
  for (Approximation a : kApproximations)
    for (Quantity q : kQuantities) {
      for (double v : report.diff(a, q).absolute) CHECK(v == 0);
      for (double v : report.diff(a, q).relative) CHECK(v == 0);
    }
}

TEST_CASE("report times sit on the shared grid") {
  const auto report = run_comparison(builtin_experiment(7), 20, 1);
  REQUIRE(report.report_index.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(report.simulation.grid[report.report_index[k]] == report.report_times[k]);
    CHECK(report.report_times[k] == 6.0 + static_cast<double>(k));
  }
  CHECK(report.adjusted.grid == report.simulation.grid);
  CHECK(report.measure_zero.grid == report.simulation.grid);
  const std::size_t g = report.report_index[3];
  CHECK(report.diff(Approximation::adjusted, Quantity::var_x1).absolute[3] ==
        report.adjusted.cov[g].v11 - report.simulation.cov[g].v11);

  ComparisonOptions late;
  late.report_times = {6, 25};
  CHECK(run_comparison(builtin_experiment(7), 20, 1, late).report_times == std::vector<double>{6});
}

TEST_CASE("figures") {
  const fs::path dir = scratch("figures");
  const auto report = run_comparison(builtin_experiment(7), 50, 3);
  const auto written = emit_figures(report, 7, dir);
  CHECK(written.size() == 10);
  for (Quantity q : kQuantities) {
    const fs::path csv = dir / ("exp7_" + to_string(q) + ".csv");
    const fs::path svg = dir / ("exp7_" + to_string(q) + ".svg");
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(svg));
    const auto lines = read_lines(csv);
    CHECK(lines.size() == report.grid_size() + 1);
    CHECK(lines.front() == "t,simulation,adjusted,measure_zero");
    const std::string body = slurp(svg);
    CHECK(body.rfind("<svg", 0) == 0);
    for (const char* label : {"simulation", "adjusted", "measure-zero"}) CHECK(body.find(label) != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("comparison files") {
  const fs::path dir = scratch("compare");
  const auto report = run_comparison(builtin_experiment(7), 50, 3);
  const auto written = write_comparison(report, dir, "exp7_");
  CHECK(written.size() == 8);
  for (const auto& p : written) CHECK(fs::exists(p));
  const auto lines = read_lines(dir / "exp7_comparison_mean_x2.csv");
  CHECK(lines.size() == 11);
  CHECK(lines[1].rfind("6,", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("difference tables") {
  const fs::path a = scratch("tables_a"), b = scratch("tables_b");
  std::vector<int> ids;
  for (int id = 1; id <= kExperimentCount; ++id) ids.push_back(id);
  std::vector<ComparisonReport> reports;
  for (int id : ids) reports.push_back(run_comparison(builtin_experiment(id), 20, 7));
  write_tables(ids, reports, a);
  std::vector<ComparisonReport> again;
  for (int id : ids) again.push_back(run_comparison(builtin_experiment(id), 20, 7));
  write_tables(ids, again, b);

  for (Quantity q : kQuantities) {
    const std::string name = "table_" + to_string(q) + ".csv";
    for (const fs::path& p : {a / name, a / "tables_abs" / name}) {
      const auto lines = read_lines(p);
      REQUIRE(lines.size() == 21);
      CHECK(lines[0] == "exp,method,6,7,8,9,10,11,12,13,14,15");
      CHECK(lines[1].rfind("1,proposed,", 0) == 0);
      CHECK(lines[2].rfind("1,meas0,", 0) == 0);
      CHECK(lines[20].rfind("10,meas0,", 0) == 0);
      for (std::size_t r = 1; r < lines.size(); ++r)
        CHECK(std::count(lines[r].begin(), lines[r].end(), ',') == 11);
    }
    CHECK(slurp(a / name) == slurp(b / name));
    CHECK(slurp(a / "tables_abs" / name) == slurp(b / "tables_abs" / name));
  }
  CHECK_THROWS_AS(write_tables({1, 2}, std::vector<ComparisonReport>(1), a), std::invalid_argument);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("adjusted orbit mean beats measure-zero where the fluid lingers at n") {
  for (int id : kLingeringExperiments) {
    const auto report = run_comparison(builtin_experiment(id), 1000, 11);
    double adjusted = 0, classic = 0;
    for (double v : report.diff(Approximation::adjusted, Quantity::mean_x2).absolute) adjusted += std::abs(v);
    for (double v : report.diff(Approximation::measure_zero, Quantity::mean_x2).absolute) classic += std::abs(v);
    INFO("experiment " << id << ": adjusted " << adjusted << ", measure-zero " << classic);
    CHECK(adjusted < classic);
  }
}

TEST_CASE("experiment id lists") {
  CHECK(parse_id_list("1-10").size() == 10);
  CHECK(parse_id_list("1..3") == std::vector<int>{1, 2, 3});
  CHECK(parse_id_list("2,4,7") == std::vector<int>{2, 4, 7});
  CHECK(parse_id_list("1-3,7") == std::vector<int>{1, 2, 3, 7});
  CHECK(parse_id_list("5") == std::vector<int>{5});
  CHECK_THROWS_AS(parse_id_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_id_list("a-b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_id_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_id_list("3x"), std::invalid_argument);
}
