#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "pinch/allocator.hpp"
#include "pinch/optimizer.hpp"
#include "pinch/scenario.hpp"

namespace pinch {

/// Everything a run reads from its JSON config.
///
/// Recognized keys (all optional; missing keys keep the defaults below):
///   carrier_frequency_hz, bandwidth_hz, noise_psd_dbm_hz,
///   waveguide_height_m, waveguide_length_m, num_users, region_length_m,
///   region_width_m, uncertainty_radius_m, target_rate_bpshz, outage_cap,
///   master_seed, pso_swarm_size, pso_max_iters, pso_inertia,
///   pso_cognitive, pso_social, pso_seed, pso_velocity_clamp_m,
///   pso_stall_iterations, pso_stall_tolerance, realizations, grid_step_m,
///   bisection_tol_m, users.
/// `users` is an array of {"x", "y"} objects (optionally with
/// "uncertainty_radius_m", "target_rate_bpshz", "outage_cap") that replaces
/// random placement. Unknown keys are rejected.
struct RunConfig {
  RadioConfig radio;
  ScenarioConfig scenario;
  PsoConfig pso;
  std::size_t realizations = 1000;
  double grid_step = 0.01;
  double bisection_tol = kDefaultBisectionTolerance;
  std::optional<std::vector<UserSpec>> users;
};

/// Throws Error(Errc::invalid_config) on malformed input.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Explicit users when given, otherwise generate_users(scenario, master_seed).
std::vector<UserSpec> scenario_users(const RunConfig& cfg);

}  // namespace pinch
