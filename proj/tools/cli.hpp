#pragma once

#include <iosfwd>

namespace pinch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the `pinch` tool:
///
///   pinch solve  --config F [--scheme pso|grid|fixed] [--out F] [--seed S]
///   pinch sweep  --config F --sweep target_rate|uncertainty_radius|outage_cap
///                --out F [--scheme pso,grid,fixed] [--values v1,v2,...]
///                [--realizations N] [--summary F] [--seed S]
///   pinch oracle --config F --x-pin V --user-index I --power P -n N [--seed S]
///
/// Returns 0 on success, 2 on usage or config errors, 1 on solver errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pinch::cli
