#pragma once

namespace pinch {

/// Ground-plane view of one user against the antenna's coverage circle.
///
/// The points where the rate exactly meets the target form a sphere of
/// radius R around the antenna; its trace on the floor is a circle of
/// radius c = sqrt(R^2 - d^2) around the antenna's ground projection. The
/// user's uncertainty disk (radius r) sits at distance b from that point.
struct CoverageProblem {
  double b = 0.0;  // center distance, m
  double r = 0.0;  // uncertainty radius, m
  double c = 0.0;  // coverage radius, m
};

enum class OverlapCase {
  full_coverage,    // c >= b + r
  no_coverage,      // c <= b - r
  coverage_inside,  // coverage circle lies within the disk
  concentric,       // b == 0 up to round-off
  intersecting,     // two crossing points
};

/// Angles and partial areas behind the uncovered ("outage") area.
///
/// alpha is the half-angle subtended by the crossing chord at the coverage
/// center, beta the same angle at the user center measured from the far
/// side. s1 is the coverage-circle sector 2*alpha, s2 the kite of the two
/// centers and the crossing points, s3 = s1 - s2 the covered part of the
/// user sector, and s4 the uncovered area of the user disk. Outside the
/// intersecting case the fields hold the limiting values of the same
/// quantities.
struct OutageGeometry {
  OverlapCase kind = OverlapCase::intersecting;
  double alpha = 0.0;
  double beta = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
};

/// Tolerance for clamping arccos arguments that drift past +-1.
inline constexpr double kAcosClampTolerance = 1e-12;

/// Trace radius of a sphere of radius `sphere_radius` centered `height`
/// above the floor. Throws Errc::infeasible_sphere when it misses the floor.
double ground_radius(double sphere_radius, double height);

/// Inverse of ground_radius.
double sphere_radius(double ground_radius, double height);

OutageGeometry outage_geometry(const CoverageProblem& p);

/// Uncovered area of the user disk, m^2.
double outage_area(const CoverageProblem& p);

/// Uncovered fraction of the user disk, in [0, 1].
double outage_fraction(const CoverageProblem& p);

}  // namespace pinch
