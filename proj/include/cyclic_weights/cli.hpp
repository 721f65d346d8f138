#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclic_weights {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1,2,3" -> {1, 2, 3}; throws std::invalid_argument on malformed input.
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace cyclic_weights
