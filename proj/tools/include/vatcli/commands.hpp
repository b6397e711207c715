#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vatcli {

// Environment variable that replaces the default enumeration limit.
inline constexpr const char* kLimitEnv = "VAT_ENUM_LIMIT";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs `vatctl` with the given arguments (argv[0] excluded). Normal output
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vatcli
