#include "pinch/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinch/error.hpp"
#include "pinch/parallel.hpp"
#include "pinch/random.hpp"

namespace pinch {
namespace {

OptimizationResult finish(std::span<const UserSpec> users, const ChannelParams& params,
                          double x_pin, double tol, std::size_t evaluations,
                          std::size_t iteration) {
  OptimizationResult result;
  result.x_pin = x_pin;
  result.allocation = sum_min_power(users, x_pin, params, tol);
  result.evaluations = evaluations;
  result.converged_iteration = iteration;
  return result;
}

}  // namespace

void validate(const PsoConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) fail(Errc::invalid_config, what);
  };
  require(cfg.swarm_size >= 2, "pso swarm size must be >= 2");
  require(cfg.max_iterations >= 1, "pso max iterations must be >= 1");
  require(cfg.inertia > 0.0, "pso inertia must be > 0");
  require(cfg.cognitive > 0.0, "pso cognitive coefficient must be > 0");
  require(cfg.social > 0.0, "pso social coefficient must be > 0");
  require(!cfg.velocity_clamp || *cfg.velocity_clamp > 0.0, "pso velocity clamp must be > 0");
  require(cfg.stall_tolerance >= 0.0, "pso stall tolerance must be >= 0");
}

double objective(std::span<const UserSpec> users, double x_pin, const ChannelParams& params,
                 double tol) {
  return sum_min_power(users, x_pin, params, tol).total_power;
}

OptimizationResult pso_optimize(std::span<const UserSpec> users, const ChannelParams& params,
                                const PsoConfig& cfg, double tol, PsoTrace* trace) {
  validate(cfg);
  const double length = params.length;
  const double vmax = cfg.velocity_clamp.value_or(0.5 * length);
  const std::size_t n = cfg.swarm_size;

  Rng rng(cfg.seed);
  std::vector<double> position(n), velocity(n), fitness(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[i] = rng.uniform(0.0, length);
    velocity[i] = rng.uniform(-vmax, vmax);
  }

  std::size_t evaluations = 0;
  auto evaluate_swarm = [&] {
    parallel_for(n, cfg.threads,
                 [&](std::size_t i) { fitness[i] = objective(users, position[i], params, tol); });
    evaluations += n;
    if (trace) {
      trace->evaluated_positions.insert(trace->evaluated_positions.end(), position.begin(),
                                        position.end());
    }
  };

  evaluate_swarm();
  std::vector<double> best_position = position;
  std::vector<double> best_fitness = fitness;
  std::size_t leader = static_cast<std::size_t>(
      std::min_element(best_fitness.begin(), best_fitness.end()) - best_fitness.begin());
  if (trace) trace->best_per_iteration.push_back(best_fitness[leader]);

  std::size_t stall = 0;
  std::size_t iteration = 0;
  while (iteration < cfg.max_iterations) {
    ++iteration;
    const double global_position = best_position[leader];
    const double previous_best = best_fitness[leader];

    for (std::size_t i = 0; i < n; ++i) {
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      double v = cfg.inertia * velocity[i] +
                 cfg.cognitive * r1 * (best_position[i] - position[i]) +
                 cfg.social * r2 * (global_position - position[i]);
      v = std::clamp(v, -vmax, vmax);
      double x = position[i] + v;
      if (x < 0.0 || x > length) {
        x = std::clamp(x, 0.0, length);
        v = 0.0;
      }
      position[i] = x;
      velocity[i] = v;
    }

    evaluate_swarm();
    for (std::size_t i = 0; i < n; ++i) {
      if (fitness[i] < best_fitness[i]) {
        best_fitness[i] = fitness[i];
        best_position[i] = position[i];
      }
      if (best_fitness[i] < best_fitness[leader]) leader = i;
    }
    if (trace) trace->best_per_iteration.push_back(best_fitness[leader]);

    const double gain = previous_best - best_fitness[leader];
    if (gain > cfg.stall_tolerance * std::abs(previous_best)) {
      stall = 0;
    } else if (++stall >= cfg.stall_iterations) {
      break;
    }
  }

  return finish(users, params, best_position[leader], tol, evaluations, iteration);
}

std::vector<double> grid_points(double length, double step) {
  if (!(std::isfinite(length) && length > 0.0)) fail(Errc::domain, "length must be > 0");
  if (!(std::isfinite(step) && step > 0.0 && step <= length)) {
    fail(Errc::domain, "grid step must lie in (0, L]");
  }

  const double inverse = 1.0 / step;
  const double per_unit = std::round(inverse);
  const bool decimal = per_unit >= 1.0 && std::abs(inverse - per_unit) <= 1e-9 * per_unit;

  std::vector<double> points;
  const auto count = static_cast<std::size_t>(std::floor(length / step * (1.0 + 1e-12)));
  points.reserve(count + 2);
  for (std::size_t i = 0; i <= count; ++i) {
    const double x = decimal ? static_cast<double>(i) / per_unit : static_cast<double>(i) * step;
    if (x > length) break;
    points.push_back(x);
  }
  if (points.back() < length) points.push_back(length);
  return points;
}

OptimizationResult grid_search(std::span<const UserSpec> users, const ChannelParams& params,
                               double step, double tol) {
  const std::vector<double> points = grid_points(params.length, step);
  double best_x = points.front();
  double best_value = objective(users, best_x, params, tol);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double value = objective(users, points[i], params, tol);
    if (value < best_value) {
      best_value = value;
      best_x = points[i];
    }
  }
  return finish(users, params, best_x, tol, points.size(), points.size());
}

OptimizationResult fixed_baseline(std::span<const UserSpec> users, const ChannelParams& params,
                                  double tol) {
  return finish(users, params, 0.0, tol, 1, 0);
}

}  // namespace pinch
