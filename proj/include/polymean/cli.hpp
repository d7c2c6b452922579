#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polymean/function_spec.hpp"

namespace polymean::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitError = 2;

/// Parses "poly:<expr>", "planewave:<direction>:<lambda>", "j0:<lambda>", "n0:<lambda>".
FunctionSpec parse_function_spec(std::string_view text);

/// Runs one subcommand (args exclude the program name). The report goes to
/// `out`, diagnostics to `err`. Returns 0 when the identity holds or the
/// command is informational, 1 when it is violated, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymean::cli
