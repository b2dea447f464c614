#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parmod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name), runs the subcommand, writes the
/// rendered result to out and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parmod::cli
