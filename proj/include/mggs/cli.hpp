#pragma once

// Command-line front end. run() parses the arguments (without the program
// name), writes the report to out and diagnostics to err, and returns the
// exit code: 0 success, 1 check failure, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace mggs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mggs
