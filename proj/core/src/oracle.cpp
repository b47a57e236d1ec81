#include "pinch/oracle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "pinch/error.hpp"
#include "pinch/parallel.hpp"
#include "pinch/random.hpp"

namespace pinch {
namespace {

// Counts hits of `hit` over n draws from `draw`, split into fixed chunks.
template <typename Draw, typename Hit>
std::size_t chunked_count(std::size_t n, std::uint64_t seed, std::size_t threads, Draw draw,
                          Hit hit) {
  const std::size_t chunks = (n + kOracleChunk - 1) / kOracleChunk;
  std::vector<std::size_t> counts(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t j) {
    Rng rng(derive_seed(seed, j));
    const std::size_t begin = j * kOracleChunk;
    const std::size_t end = std::min(n, begin + kOracleChunk);
    std::size_t count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if (hit(draw(rng))) ++count;
    }
    counts[j] = count;
  });
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

McEstimate proportion(std::size_t hits, std::size_t n, double scale) {
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return {p * scale, se * scale, n};
}

}  // namespace

McEstimate mc_outage_area(const CoverageProblem& p, std::size_t n, std::uint64_t seed,
                          std::size_t threads) {
  if (n == 0) fail(Errc::domain, "sample count must be >= 1");
  if (!(p.r >= 0.0 && p.b >= 0.0 && p.c >= 0.0)) fail(Errc::domain, "negative problem size");

  // User disk at the origin, coverage center on the +x axis.
  const double c2 = p.c * p.c;
  const std::size_t hits = chunked_count(
      n, seed, threads, [&](Rng& rng) { return sample_in_disk({0.0, 0.0}, p.r, rng); },
      [&](Point2 q) {
        const double dx = q.x - p.b;
        return dx * dx + q.y * q.y > c2;
      });
  return proportion(hits, n, std::numbers::pi * p.r * p.r);
}

McEstimate empirical_outage(const UserSpec& user, double x_pin, double power,
                            const ChannelParams& params, std::size_t n, std::uint64_t seed,
                            std::size_t threads) {
  if (n == 0) fail(Errc::domain, "sample count must be >= 1");
  if (!(power >= 0.0)) fail(Errc::domain, "power must be >= 0");

  const double d2 = params.height * params.height;
  const std::size_t hits = chunked_count(
      n, seed, threads, [&](Rng& rng) { return sample_true_location(user, rng); },
      [&](Point2 q) {
        const double dx = q.x - x_pin;
        const double dist2 = dx * dx + q.y * q.y + d2;
        const double rate =
            std::log2(1.0 + params.eta * power / (dist2 * params.noise_power));
        return rate < user.target_rate;
      });
  return proportion(hits, n, 1.0);
}

}  // namespace pinch
