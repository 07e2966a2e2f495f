#pragma once

#include <iosfwd>

namespace statmon {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
// Valid input whose answer is "outside the region" or "infeasible".
inline constexpr int kExitOutside = 2;

// Subcommands: state, v, check, surface, audit, extremal, scenario, selftest.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace statmon
