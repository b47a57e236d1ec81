#include "pinch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pinch/error.hpp"

namespace pinch {
namespace {

constexpr double pi = std::numbers::pi;

void check(const CoverageProblem& p) {
  if (!(std::isfinite(p.b) && p.b >= 0.0)) fail(Errc::domain, "center distance b must be >= 0");
  if (!(std::isfinite(p.r) && p.r > 0.0)) fail(Errc::domain, "uncertainty radius r must be > 0");
  if (!(std::isfinite(p.c) && p.c >= 0.0)) fail(Errc::domain, "coverage radius c must be >= 0");
}

// The arccos arguments must lie in [-1, 1] up to round-off.
void check_cosine(double arg) {
  if (std::abs(arg) > 1.0 + kAcosClampTolerance) {
    fail(Errc::domain, "arccos argument " + std::to_string(arg) + " outside [-1, 1]");
  }
}

// Heron's formula with sides sorted descending; stable for needle-thin
// triangles where s(s-a)(s-b)(s-c) loses all significant digits.
double triangle_area(double a, double b, double c) {
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double q = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(q, 0.0));
}

}  // namespace

double ground_radius(double sphere_radius, double height) {
  if (!(std::isfinite(height) && height >= 0.0)) fail(Errc::domain, "height must be >= 0");
  if (!std::isfinite(sphere_radius)) fail(Errc::domain, "sphere radius must be finite");
  if (sphere_radius < height) {
    fail(Errc::infeasible_sphere, "sphere radius " + std::to_string(sphere_radius) +
                                      " m does not reach the ground from height " +
                                      std::to_string(height) + " m");
  }
  return std::sqrt((sphere_radius - height) * (sphere_radius + height));
}

double sphere_radius(double ground_radius, double height) {
  if (!(std::isfinite(ground_radius) && ground_radius >= 0.0)) {
    fail(Errc::domain, "ground radius must be >= 0");
  }
  if (!(std::isfinite(height) && height >= 0.0)) fail(Errc::domain, "height must be >= 0");
  return std::hypot(ground_radius, height);
}

OutageGeometry outage_geometry(const CoverageProblem& p) {
  check(p);
  const double b = p.b;
  const double r = p.r;
  const double c = p.c;
  const double disk = pi * r * r;

  if (c >= b + r) {
    return {OverlapCase::full_coverage, 0.0, pi, 0.0, 0.0, 0.0, 0.0};
  }
  if (b < 1e-12 * std::max(r, 1.0)) {
    // c < r here, otherwise the first branch fired.
    const double inner = pi * c * c;
    return {OverlapCase::concentric, pi, 0.0, inner, 0.0, inner, disk - inner};
  }
  if (b >= r && c <= b - r) {
    return {OverlapCase::no_coverage, 0.0, 0.0, 0.0, 0.0, 0.0, disk};
  }
  if (b < r && c + b <= r) {
    const double inner = pi * c * c;
    return {OverlapCase::coverage_inside, pi, 0.0, inner, 0.0, inner, disk - inner};
  }

  // alpha = arccos((b^2 + c^2 - r^2) / 2bc) and likewise beta, evaluated
  // as atan2(4T, numerator) with T the triangle (b, c, r). Same angles, but
  // well conditioned when they are small (r << b) where arccos near 1 is not.
  const double cos_alpha_num = (b - r) * (b + r) + c * c;
  const double cos_beta_num = (b - c) * (b + c) + r * r;
  check_cosine(cos_alpha_num / (2.0 * b * c));
  check_cosine(cos_beta_num / (2.0 * b * r));
  const double triangle = triangle_area(b, c, r);

  OutageGeometry g;
  g.kind = OverlapCase::intersecting;
  g.alpha = std::atan2(4.0 * triangle, cos_alpha_num);
  g.s1 = g.alpha * c * c;
  g.s2 = 2.0 * triangle;
  g.s3 = g.s1 - g.s2;
  g.beta = std::atan2(4.0 * triangle, cos_beta_num);
  g.s4 = std::clamp((pi - g.beta) * r * r - g.s3, 0.0, disk);
  return g;
}

double outage_area(const CoverageProblem& p) { return outage_geometry(p).s4; }

double outage_fraction(const CoverageProblem& p) {
  return std::clamp(outage_area(p) / (pi * p.r * p.r), 0.0, 1.0);
}

}  // namespace pinch
