#include "qclose/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace qclose {

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

const std::set<std::string, std::less<>> kProfileKeys{"lambda", "mu1", "mu2", "beta", "p", "n"};
const std::set<std::string, std::less<>> kScalarKeys{"x1_0", "x2_0", "horizon"};

}  // namespace

ModelSpec parse_model_spec(std::string_view text, const std::string& source) {
  std::map<std::string, TimeProfile, std::less<>> profiles;
  std::map<std::string, double, std::less<>> scalars;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(source, line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(source, line_no, "missing value for '" + key + "'");
    if (profiles.contains(key) || scalars.contains(key))
      throw ConfigError(source, line_no, "duplicate key '" + key + "'");

    if (kScalarKeys.contains(key)) {
      double v = 0.0;
      if (!parse_number(value, v)) throw ConfigError(source, line_no, "bad number for '" + key + "'");
      scalars[key] = v;
    } else if (kProfileKeys.contains(key)) {
      std::vector<double> times;
      std::vector<double> values;
      if (value.find(':') == std::string_view::npos) {
        double v = 0.0;
        if (!parse_number(value, v)) throw ConfigError(source, line_no, "bad number for '" + key + "'");
        times.push_back(0.0);
        values.push_back(v);
      } else {
        std::size_t start = 0;
        while (start <= value.size()) {
          const auto comma = std::min(value.find(',', start), value.size());
          const std::string_view item = trim(value.substr(start, comma - start));
          start = comma + 1;
          const auto colon = item.find(':');
          double t = 0.0;
          double v = 0.0;
          if (colon == std::string_view::npos || !parse_number(item.substr(0, colon), t) ||
              !parse_number(item.substr(colon + 1), v))
            throw ConfigError(source, line_no, "bad profile entry '" + std::string(item) + "' for '" + key + "'");
          times.push_back(t);
          values.push_back(v);
        }
      }
      try {
        profiles.emplace(key, TimeProfile(std::move(times), std::move(values)));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(source, line_no, key + ": " + e.what());
      }
    } else {
      throw ConfigError(source, line_no, "unknown key '" + key + "'");
    }
  }

  for (const char* required : {"lambda", "mu1", "n"}) {
    if (!profiles.contains(required)) throw ConfigError(source, line_no, std::string("missing required key '") + required + "'");
  }
  if (!scalars.contains("horizon")) throw ConfigError(source, line_no, "missing required key 'horizon'");

  ModelSpec spec;
  auto take = [&](const char* key, TimeProfile& slot) {
    if (auto it = profiles.find(key); it != profiles.end()) slot = it->second;
  };
  take("lambda", spec.lambda);
  take("mu1", spec.mu1);
  take("mu2", spec.mu2);
  take("beta", spec.beta);
  take("p", spec.p);
  take("n", spec.n);
  spec.horizon = scalars["horizon"];
  if (auto it = scalars.find("x1_0"); it != scalars.end()) spec.x0.x1 = it->second;
  if (auto it = scalars.find("x2_0"); it != scalars.end()) spec.x0.x2 = it->second;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(source, line_no, e.what());
  }
  return spec;
}

ModelSpec load_model_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model_spec(buffer.str(), path.string());
}

std::string format_model_spec(const ModelSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "lambda = " << to_string(spec.lambda) << '\n'
     << "mu1 = " << to_string(spec.mu1) << '\n'
     << "mu2 = " << to_string(spec.mu2) << '\n'
     << "beta = " << to_string(spec.beta) << '\n'
     << "p = " << to_string(spec.p) << '\n'
     << "n = " << to_string(spec.n) << '\n'
     << "x1_0 = " << spec.x0.x1 << '\n'
     << "x2_0 = " << spec.x0.x2 << '\n'
     << "horizon = " << spec.horizon << '\n';
  return os.str();
}

}  // namespace qclose
