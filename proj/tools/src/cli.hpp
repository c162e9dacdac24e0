#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace antidiag::cli {

/// Exit codes: 0 clean, 1 violations, 2 usage, construction, parse or I/O error.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antidiag::cli
