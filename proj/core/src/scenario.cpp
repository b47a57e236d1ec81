#include "pinch/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pinch/error.hpp"

namespace pinch {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::invalid_config, what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const RadioConfig& cfg) {
  require(positive(cfg.carrier_frequency_hz), "carrier frequency must be positive");
  require(positive(cfg.bandwidth_hz), "bandwidth must be positive");
  require(std::isfinite(cfg.noise_psd_dbm_hz), "noise PSD must be finite");
  require(positive(cfg.waveguide_height_m), "waveguide height must be positive");
  require(positive(cfg.waveguide_length_m), "waveguide length must be positive");
}

void validate(const UserSpec& user) {
  require(std::isfinite(user.x) && user.x >= 0.0, "user x must be >= 0");
  require(std::isfinite(user.y), "user y must be finite");
  require(std::isfinite(user.radius) && user.radius >= 0.0, "uncertainty radius must be >= 0");
  require(std::isfinite(user.target_rate) && user.target_rate >= 0.0,
          "target rate must be >= 0");
  require(user.outage_cap > 0.0 && user.outage_cap <= 0.5, "outage cap must lie in (0, 0.5]");
}

void validate(const ScenarioConfig& cfg) {
  require(cfg.num_users >= 1, "num_users must be >= 1");
  require(positive(cfg.region_length_m), "region length must be positive");
  require(positive(cfg.region_width_m), "region width must be positive");
  validate(UserSpec{0.0, 0.0, cfg.uncertainty_radius_m, cfg.target_rate_bpshz, cfg.outage_cap});
}

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

ChannelParams derive_channel_params(const RadioConfig& cfg) {
  validate(cfg);
  const double wavelength = kSpeedOfLight / cfg.carrier_frequency_hz;
  const double pi = std::numbers::pi;
  return ChannelParams{
      .eta = wavelength * wavelength / (16.0 * pi * pi),
      .noise_power = dbm_to_watts(cfg.noise_psd_dbm_hz) * cfg.bandwidth_hz,
      .height = cfg.waveguide_height_m,
      .length = cfg.waveguide_length_m,
  };
}

std::vector<UserSpec> generate_users(const ScenarioConfig& cfg, std::uint64_t seed) {
  validate(cfg);
  std::vector<UserSpec> users;
  users.reserve(cfg.num_users);
  for (std::size_t k = 0; k < cfg.num_users; ++k) {
    Rng rng(derive_seed(seed, k));
    UserSpec user;
    user.x = rng.uniform(0.0, cfg.region_length_m);
    user.y = rng.uniform(0.0, cfg.region_width_m);
    user.radius = cfg.uncertainty_radius_m;
    user.target_rate = cfg.target_rate_bpshz;
    user.outage_cap = cfg.outage_cap;
    users.push_back(user);
  }
  return users;
}

Point2 sample_in_disk(Point2 center, double radius, Rng& rng) noexcept {
  const double rho = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return {center.x + rho * std::cos(theta), center.y + rho * std::sin(theta)};
}

Point2 sample_true_location(const UserSpec& user, Rng& rng) noexcept {
  return sample_in_disk({user.x, user.y}, user.radius, rng);
}

}  // namespace pinch
