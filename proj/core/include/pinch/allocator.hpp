#pragma once

#include <span>
#include <vector>

#include "pinch/scenario.hpp"

namespace pinch {

/// Bisection stops once the bracket is narrower than this, in meters.
inline constexpr double kDefaultBisectionTolerance = 1e-6;

struct UserSolution {
  double b = 0.0;      // center distance, m
  double c = 0.0;      // coverage radius, m
  double R = 0.0;      // rate-target sphere radius, m
  double power = 0.0;  // W
  double achieved_outage_fraction = 0.0;
};

struct Allocation {
  double x_pin = 0.0;
  std::vector<UserSolution> per_user;
  double total_power = 0.0;
};

/// Ground-plane distance from the antenna projection (x_pin, 0) to the
/// user's estimated position.
double center_distance(const UserSpec& user, double x_pin) noexcept;

/// Smallest coverage radius c (to within `tol`) whose uncovered fraction of
/// the user disk does not exceed `outage_cap`.
///
/// Bisects on [lo, b + r] with lo = b when the fraction at c = b already
/// exceeds the cap, else max(b - r, 0). The uncovered area decreases in c,
/// so a midpoint that leaves too much uncovered moves lo up; otherwise hi
/// comes down. The upper end of the final bracket is returned, which keeps
/// the constraint satisfied rather than approximately met.
double solve_coverage_radius(double b, double r, double outage_cap,
                             double tol = kDefaultBisectionTolerance);

/// Smallest power at which a receiver at distance R attains `target_rate`.
double min_power(double target_rate, double R, const ChannelParams& params);

/// Antenna position minimizing a lone user's power: its own x, clamped to
/// the waveguide.
double optimal_position_single(const UserSpec& user, double length) noexcept;

UserSolution solve_user(const UserSpec& user, double x_pin, const ChannelParams& params,
                        double tol = kDefaultBisectionTolerance);

/// Minimum sum power at a fixed antenna position. Users do not interact,
/// so this is the sum of solve_user over the list.
Allocation sum_min_power(std::span<const UserSpec> users, double x_pin,
                         const ChannelParams& params, double tol = kDefaultBisectionTolerance);

}  // namespace pinch
