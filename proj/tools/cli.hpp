#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discop::cli {

/// Exit codes: 0 success, 1 domain or precondition error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace discop::cli
