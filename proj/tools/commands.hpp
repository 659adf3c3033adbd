#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asearch::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the CLI on `args` (without the program name). Reports go to the
// --out file, or to `out` when none is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asearch::cli
