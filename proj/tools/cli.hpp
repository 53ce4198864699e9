#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genergy::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_violation = 2;

/// Runs the command line `args` (args[0] is the program name). Primary output
/// goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genergy::cli
