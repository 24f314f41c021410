#pragma once

// The forestalg command line. Kept in the library so tests can drive it
// in-process with captured streams.

#include <ostream>
#include <string>
#include <vector>

namespace forestalg {

/// Exit codes: 0 all requested properties hold (or the piece relation holds),
/// 1 some property fails, 3 nothing fails but something is unknown,
/// 2 input, validation or cap errors.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnknown = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forestalg
