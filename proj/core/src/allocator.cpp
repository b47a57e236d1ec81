#include "pinch/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pinch/error.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

double center_distance(const UserSpec& user, double x_pin) noexcept {
  return std::hypot(x_pin - user.x, user.y);
}

double solve_coverage_radius(double b, double r, double outage_cap, double tol) {
  if (!(outage_cap > 0.0 && outage_cap <= 0.5)) {
    fail(Errc::unsupported_threshold,
         "outage cap " + std::to_string(outage_cap) + " outside (0, 0.5]");
  }
  if (!(std::isfinite(b) && b >= 0.0)) fail(Errc::domain, "center distance must be >= 0");
  if (!(std::isfinite(r) && r > 0.0)) fail(Errc::domain, "uncertainty radius must be > 0");
  if (!(std::isfinite(tol) && tol > 0.0)) fail(Errc::domain, "tolerance must be > 0");

  const double allowed = outage_cap * std::numbers::pi * r * r;
  auto too_much_outage = [&](double c) { return outage_area({b, r, c}) > allowed; };

  double lo = too_much_outage(b) ? b : std::max(b - r, 0.0);
  double hi = b + r;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at float resolution
    if (too_much_outage(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double min_power(double target_rate, double R, const ChannelParams& params) {
  if (!(std::isfinite(target_rate) && target_rate >= 0.0)) {
    fail(Errc::domain, "target rate must be >= 0");
  }
  if (!(std::isfinite(R) && R > 0.0)) fail(Errc::domain, "sphere radius must be > 0");
  // Geometry first so that power is an exact multiple of (2^rate - 1).
  const double per_unit_snr = R * R * params.noise_power / params.eta;
  return (std::exp2(target_rate) - 1.0) * per_unit_snr;
}

double optimal_position_single(const UserSpec& user, double length) noexcept {
  return std::clamp(user.x, 0.0, length);
}

UserSolution solve_user(const UserSpec& user, double x_pin, const ChannelParams& params,
                        double tol) {
  if (!(x_pin >= 0.0 && x_pin <= params.length)) {
    fail(Errc::domain, "antenna position " + std::to_string(x_pin) + " outside [0, " +
                           std::to_string(params.length) + "]");
  }
  if (!(std::isfinite(user.radius) && user.radius >= 0.0)) {
    fail(Errc::domain, "uncertainty radius must be >= 0");
  }

  UserSolution s;
  s.b = center_distance(user, x_pin);
  if (user.radius == 0.0) {
    // Location known exactly: cover the single point.
    if (!(user.outage_cap > 0.0 && user.outage_cap <= 0.5)) {
      fail(Errc::unsupported_threshold, "outage cap outside (0, 0.5]");
    }
    s.c = s.b;
    s.achieved_outage_fraction = 0.0;
  } else {
    s.c = solve_coverage_radius(s.b, user.radius, user.outage_cap, tol);
    s.achieved_outage_fraction = outage_fraction({s.b, user.radius, s.c});
  }
  s.R = sphere_radius(s.c, params.height);
  s.power = min_power(user.target_rate, s.R, params);
  return s;
}

Allocation sum_min_power(std::span<const UserSpec> users, double x_pin,
                         const ChannelParams& params, double tol) {
  Allocation a;
  a.x_pin = x_pin;
  a.per_user.reserve(users.size());
  for (const UserSpec& user : users) {
    a.per_user.push_back(solve_user(user, x_pin, params, tol));
    a.total_power += a.per_user.back().power;
  }
  return a;
}

}  // namespace pinch
