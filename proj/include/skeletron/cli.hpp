#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skeletron::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one subcommand. `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeletron::cli
