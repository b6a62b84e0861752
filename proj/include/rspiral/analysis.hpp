#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rspiral/geom_invariants.hpp"
#include "rspiral/spiral_solver.hpp"

namespace rspiral {

struct ProfileSample {
  double t = 0.0;
  double s = 0.0;  ///< arc length from t = 0
  double k = 0.0;
};

struct CurvatureProfile {
  std::vector<ProfileSample> samples;
  /// +1 increasing, -1 decreasing, 0 when the samples are not monotone.
  int monotone_direction = 0;
};

/// Relative tolerance of all arc-length quadratures in this module.
inline constexpr double kArcLengthTolerance = 1e-10;

/// Arc length between parameters t0 and t1 in world units.
double arc_length(const RationalSpiralArc& curve, double t0, double t1);

/// n >= 2 samples uniform in t with analytic curvature and quadrature arc length.
CurvatureProfile curvature_profile(const RationalSpiralArc& curve, int n);

/// True iff the curvature differences share one sign. A difference of
/// magnitude <= slack is tolerated at the first and last step only (vertex
/// at an endpoint).
bool assert_monotone(const CurvatureProfile& profile, double slack);

/// Parameter of the zero of curvature when the end curvatures have opposite
/// signs (or one of them vanishes).
std::optional<double> find_inflection(const RationalSpiralArc& curve);

/// Circular arc from (-1, 0) to (1, 0) leaving (-1, 0) at `start_tangent`;
/// its curvature is -sin(start_tangent). Arcs through infinity are allowed.
struct CircularArc {
  double start_tangent = 0.0;
  double curvature = 0.0;

  /// Point for u in [0, 1]; non-finite where the arc passes through infinity.
  Point2 point(double u) const;
};

/// Region between two circular arcs sharing the boundary tangents.
struct Lense {
  CircularArc first;   ///< tangent alpha at (-1, 0)
  CircularArc second;  ///< tangent beta at (1, 0)
  double sigma = 0.0;  ///< signed angular width
};

Lense lense_of(const NormalizedProblem& problem);

/// Start tangent at (-1, 0) of the circular arc from (-1, 0) to (1, 0)
/// passing through z: arg((1 + z) / (1 - z)).
double pencil_angle(Point2 z);

/// Membership with an angular tolerance on the pencil angle; the chord
/// endpoints themselves are always members.
bool lense_contains(const Lense& lense, Point2 z, double tol = 1e-9);

bool contains_points_in_lense(std::span<const Point2> points, const Lense& lense,
                              double tol = 1e-9);

/// Samples n points of the curve in its chord frame.
bool contains_in_lense(const RationalSpiralArc& curve, const Lense& lense, int n = 1000,
                       double tol = 1e-9);

}  // namespace rspiral
