#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace distinguo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

/// Runs the command line `args` (without the program name), writing results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace distinguo
