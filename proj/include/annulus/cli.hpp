#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace annulus::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kBudgetEnv = "ANNULUS_BUDGET";

/// Parses arguments (args[0] is the program name), runs the command and writes
/// its report to -o or `out`. Exit codes: 0 success, 1 usage/domain error,
/// 2 budget exceeded or verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace annulus::cli
