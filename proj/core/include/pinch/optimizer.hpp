#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pinch/allocator.hpp"
#include "pinch/scenario.hpp"

namespace pinch {

/// Global-best particle swarm over the antenna position.
///
/// Defaults are the usual constriction-equivalent settings. A run stops
/// early once the best objective has failed to improve by more than
/// `stall_tolerance` (relative to its value) for `stall_iterations`
/// consecutive iterations.
struct PsoConfig {
  std::size_t swarm_size = 30;
  std::size_t max_iterations = 100;
  double inertia = 0.7298;
  double cognitive = 1.49618;
  double social = 1.49618;
  std::optional<double> velocity_clamp;  // m; L / 2 when unset
  std::size_t stall_iterations = 20;
  double stall_tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::size_t threads = 1;  // fitness workers per iteration; 0 = PINCH_THREADS
};

void validate(const PsoConfig& cfg);

struct OptimizationResult {
  double x_pin = 0.0;
  Allocation allocation;
  std::size_t evaluations = 0;
  std::size_t converged_iteration = 0;
};

/// Optional record of a swarm run.
struct PsoTrace {
  std::vector<double> best_per_iteration;  // index 0 is the initial swarm
  std::vector<double> evaluated_positions;
};

/// Minimum sum power at antenna position x_pin, W.
double objective(std::span<const UserSpec> users, double x_pin, const ChannelParams& params,
                 double tol = kDefaultBisectionTolerance);

OptimizationResult pso_optimize(std::span<const UserSpec> users, const ChannelParams& params,
                                const PsoConfig& cfg, double tol = kDefaultBisectionTolerance,
                                PsoTrace* trace = nullptr);

/// Exhaustive search over {0, step, 2 step, ..., L}, always including L.
/// Ties go to the smallest position.
OptimizationResult grid_search(std::span<const UserSpec> users, const ChannelParams& params,
                               double step, double tol = kDefaultBisectionTolerance);

/// Conventional antenna held at the feed point, x_pin = 0.
OptimizationResult fixed_baseline(std::span<const UserSpec> users, const ChannelParams& params,
                                  double tol = kDefaultBisectionTolerance);

/// Grid points used by grid_search. When 1/step is an integer the points
/// are formed as i / (1/step), so decimally nested grids share exact values.
std::vector<double> grid_points(double length, double step);

}  // namespace pinch
