#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitIllPosed = 3;
inline constexpr int kExitInputError = 4;
inline constexpr int kExitIterationLimit = 5;

/// Runs one subcommand (solve, separate, verify, enumerate, bench). `args`
/// excludes the program name. Output is key=value lines on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace polarcut::cli
