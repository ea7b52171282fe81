#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prolong::cli {

/// Runs one command line (without the program name). Writes the JSON
/// report to `out` and diagnostics to `err`. Exit codes: 0 pass, 1 a
/// mathematical check failed, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prolong::cli
