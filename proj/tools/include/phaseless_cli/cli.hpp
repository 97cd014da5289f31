#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phaseless::cli {

/// Process exit codes.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// as JSON, diagnostics to `err`; "-" as an input file reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace phaseless::cli
