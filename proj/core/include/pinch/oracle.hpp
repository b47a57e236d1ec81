#pragma once

#include <cstddef>
#include <cstdint>

#include "pinch/geometry.hpp"
#include "pinch/scenario.hpp"

namespace pinch {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t sample_count = 0;
};

/// Samples per independently seeded chunk. Chunk j of an estimate seeded
/// with s reads stream derive_seed(s, j); the estimate is a sum of integer
/// counts and so does not depend on the thread count.
inline constexpr std::size_t kOracleChunk = std::size_t{1} << 16;

/// Monte Carlo uncovered area of the user disk: fraction of n uniform disk
/// points farther than c from the coverage center, times pi r^2.
McEstimate mc_outage_area(const CoverageProblem& p, std::size_t n, std::uint64_t seed,
                          std::size_t threads = 0);

/// Monte Carlo outage probability: fraction of n sampled true locations at
/// which log2(1 + eta P / (dist^2 sigma^2)) falls short of the target rate,
/// with dist measured to the antenna at (x_pin, 0, d).
McEstimate empirical_outage(const UserSpec& user, double x_pin, double power,
                            const ChannelParams& params, std::size_t n, std::uint64_t seed,
                            std::size_t threads = 0);

}  // namespace pinch
