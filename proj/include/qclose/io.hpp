#pragma once

#include <filesystem>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

namespace qclose {

/// %.17g, so every double round-trips.
std::string format_double(double v);

/// Comma-separated row terminated by '\n'.
void write_row(std::ostream& os, std::initializer_list<double> values);
void write_row(std::ostream& os, std::span<const double> values);

/// Writes through `<path>.tmp` and renames over `path`. Parent directories are created.
/// Throws std::runtime_error naming the path on failure.
void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace qclose
