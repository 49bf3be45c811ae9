#pragma once

// Command-line entry point. Exit codes: 0 success, 1 verification or runtime
// failure, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace bt1::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable overriding the default enumeration budget.
inline constexpr const char* kBudgetEnv = "BT1_ENUM_BUDGET";

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bt1::cli
