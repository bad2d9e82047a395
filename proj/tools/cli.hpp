#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partcount::cli {

/// Exit codes: 0 success, 1 mathematical/verification/cache failure, 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Cache location
/// falls back to the PARTCOUNT_CACHE environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partcount::cli
