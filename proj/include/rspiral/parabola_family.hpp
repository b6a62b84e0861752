#pragma once

#include "rspiral/geom_invariants.hpp"

namespace rspiral {

/// Quadratic Bezier from (-1, 0) to (1, 0) with control point (p, q).
struct ParabolicArc {
  double p = 0.0;
  double q = 0.0;
  double h1 = 0.0;  ///< |AP|
  double h2 = 0.0;  ///< |PB|
  double u1 = 1.0;  ///< 1 + p
  double u2 = 1.0;  ///< 1 - p

  /// Throws DomainError for q == 0 (the arc degenerates to a segment).
  static ParabolicArc from_control(double p, double q);
  /// Control point given by its offsets from the chord endpoints; keeps full
  /// relative precision when P is very close to A or B.
  static ParabolicArc from_offsets(double one_plus_p, double one_minus_p, double q);
};

Point2 eval_parabola(const ParabolicArc& arc, double t);

struct BoundaryAngles {
  double alpha = 0.0;
  double beta = 0.0;
};

struct BoundaryCurvatures {
  double a = 0.0;
  double b = 0.0;
};

BoundaryAngles boundary_angles(const ParabolicArc& arc);
BoundaryCurvatures boundary_curvatures(const ParabolicArc& arc);

/// Both of the above packed as a normalized problem.
NormalizedProblem boundary_data(const ParabolicArc& arc);

/// (a + sin alpha, b - sin beta) of the arc, evaluated without cancellation
/// as q (h1^2 - 1) / h1^3 and q (h2^2 - 1) / h2^3.
struct BoundaryFactors {
  double start = 0.0;
  double end = 0.0;
};
BoundaryFactors boundary_factors(const ParabolicArc& arc);

/// k(t) = -8 q / g(t)^3 with g = |z'(t)|.
double parabola_curvature(const ParabolicArc& arc, double t);

/// True iff the control point lies in or on one of the circles
/// x^2 + x + y^2 = 0, x^2 - x + y^2 = 0 and off the x-axis.
bool is_spiral_control(double p, double q);
bool is_spiral_control(const ParabolicArc& arc);

/// Polar radius of the locus of control points with lense width sigma0.
/// Throws DomainError where the hyperbola has no point in direction xi.
double hyperbola_rho(double xi, double sigma0);

/// Invariant Q of the control point on the sigma0-hyperbola at polar angle xi.
/// Throws DomainError at the poles sin(xi) = 0 and cos(xi) = 0.
double q_of_xi(double xi, double sigma0);

/// Least upper bound of Q over spiral parabolic arcs with lense width sigma0.
/// Requires 0 < |sigma0| < pi/2, otherwise DomainError.
double q_max(double sigma0);

/// Intermediate values of the closed-form solution of
/// theta^4 + 6 theta^2 + 8 Q1 theta - 3 = 0.
struct QuarticSolution {
  double Q1 = 0.0;
  double m = 0.0;
  double n = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r12 = 0.0;
  double theta0 = 0.0;  ///< tan(xi0)
  double xi0 = 0.0;
  double residual = 0.0;  ///< scaled residual of the quartic at theta0
};

struct ControlPointSolution {
  ParabolicArc first;   ///< control point at polar angle xi0
  ParabolicArc second;  ///< point reflection of the first through the origin
  QuarticSolution quartic;
};

/// Quartic residual divided by the sum of the magnitudes of its terms.
double quartic_residual(double theta, double Q1);

/// Control points of the two spiral parabolic arcs with invariants (Q0, sigma0).
/// Throws NotApplicable unless 0 < |sigma0| < pi/2 and Q0 <= q_max(sigma0).
ControlPointSolution solve_control_points(double Q0, double sigma0);

/// Same, with Q1 taken from the problem's curvature factors directly, which
/// avoids the cancellation in Q0 - sin^2(sigma0 / 2).
ControlPointSolution solve_control_points(const NormalizedProblem& problem);

/// Core of the solve for a given reduced invariant Q1.
ControlPointSolution solve_from_q1(double Q1, double sigma0);

}  // namespace rspiral
