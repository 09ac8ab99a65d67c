#pragma once

#include <chrono>
#include <iosfwd>
#include <string>

namespace starec::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kTimedOut = 3 };

/// "60s", "500ms", "2m", "1h"; a bare number means seconds. Throws
/// std::invalid_argument.
std::chrono::milliseconds parse_duration(const std::string& text);

/// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starec::cli
