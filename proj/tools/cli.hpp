#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specfun::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Names accepted by `eval`, sorted.
std::vector<std::string> eval_function_names();

}  // namespace specfun::cli
