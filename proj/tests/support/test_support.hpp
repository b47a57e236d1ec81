#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <quadmath.h>

#include "pinch/geometry.hpp"
#include "pinch/scenario.hpp"

namespace pinch::test {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline ChannelParams reference_channel() { return derive_channel_params(RadioConfig{}); }

/// pi r^2 minus the two-circle intersection area, built from the
/// chord-distance construction: d1 = (b^2 + r^2 - c^2) / 2b is the signed
/// distance from the user center to the common chord and each circle
/// contributes its circular segment. Quad precision because the segment terms
/// cancel heavily when the circles differ greatly in size.
inline double uncovered_by_lens(double b, double r, double c) {
  using real = __float128;
  const real one = 1;
  const real pi_q = acosq(-one);
  const real d1 = ((real(b) - c) * (real(b) + c) + real(r) * r) / (2 * real(b));
  const real d2 = b - d1;
  auto segment = [one](real radius, real dist) {
    const real h = std::clamp(dist / radius, -one, one);
    const real half = (radius - dist) * (radius + dist);
    return radius * radius * acosq(h) - dist * sqrtq(half > 0 ? half : real(0));
  };
  return static_cast<double>(pi_q * r * r - segment(r, d1) - segment(c, d2));
}

/// Uniform draw of (b, r, c) with the circles crossing at two points.
template <typename Engine>
void random_intersecting(Engine& gen, double& b, double& r, double& c) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  r = 0.1 + 9.9 * unit(gen);
  b = 0.01 + 60.0 * unit(gen);
  const double lo = std::abs(b - r);
  const double hi = b + r;
  c = lo + (hi - lo) * (0.001 + 0.998 * unit(gen));
}

/// One-sample Kolmogorov-Smirnov statistic of `samples` against U(0, 1).
inline double ks_uniform(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = std::clamp(samples[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Coefficient of determination of the least-squares line through (x, y).
inline double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  return syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
}

/// Closed-form outage fraction a user would see at `power`, rebuilt from
/// the link equation independently of the allocator.
inline double outage_fraction_at_power(const UserSpec& user, double x_pin, double power,
                                       const ChannelParams& params) {
  const double R2 = params.eta * power / ((std::exp2(user.target_rate) - 1.0) * params.noise_power);
  const double d2 = params.height * params.height;
  if (R2 < d2) return 1.0;
  const double b = std::hypot(x_pin - user.x, user.y);
  return outage_fraction({b, user.radius, std::sqrt(R2 - d2)});
}

}  // namespace pinch::test
