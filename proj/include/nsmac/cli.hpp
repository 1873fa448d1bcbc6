#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsmac {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name). Results go to `out`, reports and
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsmac
