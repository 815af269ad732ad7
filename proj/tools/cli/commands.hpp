#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace labelflow::cli {

/// Exit codes: 0 success, 1 user or config error, 2 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternal = 2;

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace labelflow::cli
