#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one subcommand (args exclude the program name). JSON goes to out,
/// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polar::cli
