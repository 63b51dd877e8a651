#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qclose/model.hpp"

namespace qclose {

/// Parse failure; what() reads "<source>:<line>: <message>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the `key = value` model format:
///
///   # comment
///   lambda  = 0:45, 2:55, 4:45
///   mu1     = 1
///   n       = 50
///   horizon = 20
///
/// Profile keys (lambda, mu1, mu2, beta, p, n) take either a constant or a list
/// of `time:value` pairs. Scalars: x1_0, x2_0, horizon. lambda, mu1, n and
/// horizon are required; other rates default to 0 and the initial state to (0, 0).
ModelSpec parse_model_spec(std::string_view text, const std::string& source = "<config>");

/// Throws std::runtime_error if the file cannot be read, ConfigError on bad content.
ModelSpec load_model_spec(const std::filesystem::path& path);

/// Inverse of parse_model_spec (full precision).
std::string format_model_spec(const ModelSpec& spec);

}  // namespace qclose
