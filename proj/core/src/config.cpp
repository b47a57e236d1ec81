#include "pinch/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pinch/error.hpp"

namespace pinch {
namespace {

using nlohmann::json;

template <typename T>
void read(const json& doc, const char* key, T& out) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    if constexpr (std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned()) fail(Errc::invalid_config, std::string(key) + " must be a non-negative integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) fail(Errc::invalid_config, std::string(key) + " must be a number");
    }
    out = it->get<T>();
  } catch (const json::exception& e) {
    fail(Errc::invalid_config, std::string(key) + ": " + e.what());
  }
}

UserSpec read_user(const json& entry, const ScenarioConfig& defaults) {
  static const std::set<std::string> known{"x", "y", "uncertainty_radius_m", "target_rate_bpshz",
                                           "outage_cap"};
  if (!entry.is_object()) fail(Errc::invalid_config, "users entries must be objects");
  for (const auto& [key, unused] : entry.items()) {
    if (!known.count(key)) fail(Errc::invalid_config, "unknown user key '" + key + "'");
  }
  if (!entry.contains("x") || !entry.contains("y")) {
    fail(Errc::invalid_config, "users entries need x and y");
  }
  UserSpec user{0.0, 0.0, defaults.uncertainty_radius_m, defaults.target_rate_bpshz,
                defaults.outage_cap};
  read(entry, "x", user.x);
  read(entry, "y", user.y);
  read(entry, "uncertainty_radius_m", user.radius);
  read(entry, "target_rate_bpshz", user.target_rate);
  read(entry, "outage_cap", user.outage_cap);
  validate(user);
  return user;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(Errc::invalid_config, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::invalid_config, "config must be a JSON object");

  static const std::set<std::string> known{
      "carrier_frequency_hz", "bandwidth_hz",        "noise_psd_dbm_hz",
      "waveguide_height_m",   "waveguide_length_m",  "num_users",
      "region_length_m",      "region_width_m",      "uncertainty_radius_m",
      "target_rate_bpshz",    "outage_cap",          "master_seed",
      "pso_swarm_size",       "pso_max_iters",       "pso_inertia",
      "pso_cognitive",        "pso_social",          "pso_seed",
      "pso_velocity_clamp_m", "pso_stall_iterations", "pso_stall_tolerance",
      "realizations",         "grid_step_m",         "bisection_tol_m",
      "users"};
  for (const auto& [key, unused] : doc.items()) {
    if (!known.count(key)) fail(Errc::invalid_config, "unknown config key '" + key + "'");
  }

  RunConfig cfg;
  read(doc, "carrier_frequency_hz", cfg.radio.carrier_frequency_hz);
  read(doc, "bandwidth_hz", cfg.radio.bandwidth_hz);
  read(doc, "noise_psd_dbm_hz", cfg.radio.noise_psd_dbm_hz);
  read(doc, "waveguide_height_m", cfg.radio.waveguide_height_m);
  read(doc, "waveguide_length_m", cfg.radio.waveguide_length_m);

  read(doc, "num_users", cfg.scenario.num_users);
  read(doc, "region_length_m", cfg.scenario.region_length_m);
  read(doc, "region_width_m", cfg.scenario.region_width_m);
  read(doc, "uncertainty_radius_m", cfg.scenario.uncertainty_radius_m);
  read(doc, "target_rate_bpshz", cfg.scenario.target_rate_bpshz);
  read(doc, "outage_cap", cfg.scenario.outage_cap);
  read(doc, "master_seed", cfg.scenario.master_seed);

  read(doc, "pso_swarm_size", cfg.pso.swarm_size);
  read(doc, "pso_max_iters", cfg.pso.max_iterations);
  read(doc, "pso_inertia", cfg.pso.inertia);
  read(doc, "pso_cognitive", cfg.pso.cognitive);
  read(doc, "pso_social", cfg.pso.social);
  read(doc, "pso_seed", cfg.pso.seed);
  if (doc.contains("pso_velocity_clamp_m")) {
    double clamp = 0.0;
    read(doc, "pso_velocity_clamp_m", clamp);
    cfg.pso.velocity_clamp = clamp;
  }
  read(doc, "pso_stall_iterations", cfg.pso.stall_iterations);
  read(doc, "pso_stall_tolerance", cfg.pso.stall_tolerance);

  read(doc, "realizations", cfg.realizations);
  read(doc, "grid_step_m", cfg.grid_step);
  read(doc, "bisection_tol_m", cfg.bisection_tol);

  validate(cfg.radio);
  validate(cfg.scenario);
  validate(cfg.pso);
  if (cfg.realizations < 1) fail(Errc::invalid_config, "realizations must be >= 1");
  if (!(cfg.grid_step > 0.0 && cfg.grid_step <= cfg.radio.waveguide_length_m)) {
    fail(Errc::invalid_config, "grid_step_m must lie in (0, waveguide_length_m]");
  }
  if (!(cfg.bisection_tol > 0.0)) fail(Errc::invalid_config, "bisection_tol_m must be > 0");

  if (const auto it = doc.find("users"); it != doc.end()) {
    if (!it->is_array() || it->empty()) {
      fail(Errc::invalid_config, "users must be a non-empty array");
    }
    std::vector<UserSpec> users;
    for (const json& entry : *it) users.push_back(read_user(entry, cfg.scenario));
    cfg.scenario.num_users = users.size();
    cfg.users = std::move(users);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_config, "cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<UserSpec> scenario_users(const RunConfig& cfg) {
  if (cfg.users) return *cfg.users;
  return generate_users(cfg.scenario, cfg.scenario.master_seed);
}

}  // namespace pinch
