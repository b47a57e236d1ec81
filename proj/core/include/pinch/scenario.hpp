#pragma once

#include <cstdint>
#include <vector>

#include "pinch/random.hpp"

namespace pinch {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Radio-level description of a deployment. Defaults are the reference
/// setup: 28 GHz carrier, 100 MHz bandwidth, -174 dBm/Hz noise floor and a
/// 50 m waveguide hung 3 m above the floor.
struct RadioConfig {
  double carrier_frequency_hz = 28e9;
  double bandwidth_hz = 100e6;
  double noise_psd_dbm_hz = -174.0;
  double waveguide_height_m = 3.0;
  double waveguide_length_m = 50.0;
};

/// Link constants consumed by the solvers.
struct ChannelParams {
  double eta = 0.0;          // lambda^2 / (16 pi^2), m^2
  double noise_power = 0.0;  // W
  double height = 0.0;       // waveguide height d, m
  double length = 0.0;       // waveguide length L, m
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Estimated position of one user, its uncertainty disk and QoS target.
struct UserSpec {
  double x = 0.0;
  double y = 0.0;
  double radius = 3.0;       // m
  double target_rate = 3.0;  // bps/Hz
  double outage_cap = 0.01;

  friend bool operator==(const UserSpec&, const UserSpec&) = default;
};

struct ScenarioConfig {
  std::size_t num_users = 5;
  double region_length_m = 120.0;
  double region_width_m = 20.0;
  double uncertainty_radius_m = 3.0;
  double target_rate_bpshz = 3.0;
  double outage_cap = 0.01;
  std::uint64_t master_seed = 1;
};

void validate(const RadioConfig& cfg);
void validate(const UserSpec& user);
void validate(const ScenarioConfig& cfg);

ChannelParams derive_channel_params(const RadioConfig& cfg);

/// Converts a power level in dBm to watts.
double dbm_to_watts(double dbm) noexcept;

/// Draws K users uniformly over [0, length] x [0, width]; the waveguide runs
/// along y = 0. User k reads from stream derive_seed(seed, k).
std::vector<UserSpec> generate_users(const ScenarioConfig& cfg, std::uint64_t seed);

/// Uniform point in the disk of radius `radius` around `center`, drawn in
/// polar form with radius * sqrt(u) so the areal density is flat. Consumes
/// exactly two uniforms.
Point2 sample_in_disk(Point2 center, double radius, Rng& rng) noexcept;

/// True location of `user`, uniform over its uncertainty disk.
Point2 sample_true_location(const UserSpec& user, Rng& rng) noexcept;

}  // namespace pinch
