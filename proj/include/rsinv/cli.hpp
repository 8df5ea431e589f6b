#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsinv::cli {

/// Exit codes: 0 success, 1 failed check or verification, 2 usage or domain error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsinv::cli
