#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltest::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCapRefusal = 2;
inline constexpr int kInternalError = 3;

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltest::cli
