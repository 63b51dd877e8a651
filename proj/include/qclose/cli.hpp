#pragma once

#include <string>
#include <vector>

namespace qclose {

/// Parses "1-10", "1..10", "2,4,7" or combinations like "1-3,7". Throws std::invalid_argument.
std::vector<int> parse_id_list(const std::string& text);

/// Entry point of the qclose tool. 0 on success, 1 on runtime or config errors,
/// 2 on usage errors.
int cli_main(int argc, char** argv);

}  // namespace qclose
