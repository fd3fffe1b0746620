#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsc::cli
