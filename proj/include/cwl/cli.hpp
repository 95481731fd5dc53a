#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cwl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `cwl` invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and warnings to `err`. Returns 0 on success, 1 when
/// `verify` finds a failure, 2 on any parse or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwl
