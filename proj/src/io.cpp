#include "qclose/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace qclose {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_row(std::ostream& os, std::span<const double> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) os << ',';
    os << format_double(values[k]);
  }
  os << '\n';
}

void write_row(std::ostream& os, std::initializer_list<double> values) {
  write_row(os, std::span<const double>(values.begin(), values.size()));
}

void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error(path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error(tmp.string() + ": write failed");
  }
  fs::rename(tmp, path, ec);
  if (ec) throw std::runtime_error(path.string() + ": " + ec.message());
}

}  // namespace qclose
