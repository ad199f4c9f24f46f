#pragma once

#include <iosfwd>
#include <vector>

namespace islecolor {

/// Subcommands: solve, bench, verify, info. Returns the process exit code:
/// 0 on success, 1 when a solve misses its target or verification finds a
/// conflict, 2 on usage or input errors.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Reads a witness/solution file: `c` lines are skipped, every other token
/// must be a non-negative integer color.
std::vector<int> parse_solution(std::istream& in);

}  // namespace islecolor
