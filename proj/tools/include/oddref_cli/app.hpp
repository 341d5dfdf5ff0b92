#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddref::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Runs the tool with argv[1..] given as args. Results go to out; diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddref::cli
