#include "rspiral/parabola_family.hpp"

#include <cmath>
#include <numbers>

#include "rspiral/errors.hpp"

namespace rspiral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Q1 values beyond this would overflow m = cbrt(1 + Q1^2).
constexpr double kMaxQ1 = 1e150;
constexpr double kMaxResidual = 1e-10;

}  // namespace

ParabolicArc ParabolicArc::from_control(double p, double q) {
  if (q == 0.0 || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("parabolic arc needs a finite control point off the chord");
  }
  return from_offsets(1.0 + p, 1.0 - p, q);
}

ParabolicArc ParabolicArc::from_offsets(double one_plus_p, double one_minus_p, double q) {
  if (q == 0.0 || !std::isfinite(one_plus_p) || !std::isfinite(one_minus_p) || !std::isfinite(q)) {
    throw DomainError("parabolic arc needs a finite control point off the chord");
  }
  // p from whichever offset is larger keeps the small one exact.
  const double p = one_plus_p >= one_minus_p ? one_plus_p - 1.0 : 1.0 - one_minus_p;
  return {p, q, std::hypot(one_plus_p, q), std::hypot(one_minus_p, q), one_plus_p, one_minus_p};
}

Point2 eval_parabola(const ParabolicArc& arc, double t) {
  const double u = 1.0 - t;
  return {-u * u + 2.0 * arc.p * u * t + t * t, 2.0 * arc.q * t * u};
}

BoundaryAngles boundary_angles(const ParabolicArc& arc) {
  return {std::atan2(arc.q, arc.u1), std::atan2(-arc.q, arc.u2)};
}

BoundaryCurvatures boundary_curvatures(const ParabolicArc& arc) {
  return {-arc.q / (arc.h1 * arc.h1 * arc.h1), -arc.q / (arc.h2 * arc.h2 * arc.h2)};
}

NormalizedProblem boundary_data(const ParabolicArc& arc) {
  const auto [alpha, beta] = boundary_angles(arc);
  const auto [a, b] = boundary_curvatures(arc);
  return {alpha, beta, a, b};
}

BoundaryFactors boundary_factors(const ParabolicArc& arc) {
  // h1^2 - 1 = p (p + 2) + q^2, h2^2 - 1 = p (p - 2) + q^2
  const double q2 = arc.q * arc.q;
  const double d1 = arc.p * (arc.p + 2.0) + q2;
  const double d2 = arc.p * (arc.p - 2.0) + q2;
  return {arc.q * d1 / (arc.h1 * arc.h1 * arc.h1), arc.q * d2 / (arc.h2 * arc.h2 * arc.h2)};
}

double parabola_curvature(const ParabolicArc& arc, double t) {
  const double u = 1.0 - t;
  const double dx = 2.0 * arc.u1 * u + 2.0 * arc.u2 * t;
  const double dy = 2.0 * arc.q * (u - t);
  const double g = std::hypot(dx, dy);
  return -8.0 * arc.q / (g * g * g);
}

bool is_spiral_control(double p, double q) {
  if (q == 0.0) return false;
  const double r2 = p * p + q * q;
  return (r2 + p) * (r2 - p) <= 0.0;
}

bool is_spiral_control(const ParabolicArc& arc) {
  if (arc.q == 0.0) return false;
  const double q2 = arc.q * arc.q;
  return (arc.p * arc.u1 + q2) * (q2 - arc.p * arc.u2) <= 0.0;
}

double hyperbola_rho(double xi, double sigma0) {
  const double radicand = std::sin(sigma0) / std::sin(sigma0 - 2.0 * xi);
  if (!(radicand > 0.0) || !std::isfinite(radicand)) {
    throw DomainError("polar angle outside the admissible hyperbola intervals");
  }
  return std::sqrt(radicand);
}

double q_of_xi(double xi, double sigma0) {
  const double c = std::cos(xi);
  const double s = std::sin(xi);
  if (std::abs(c) < 1e-15 || std::abs(s) < 1e-15) {
    throw DomainError("q_of_xi evaluated at a pole");
  }
  const double c2 = c * c;
  const double f1 = (1.0 + 4.0 * c2 - 8.0 * c2 * c2) / (8.0 * c2 * c * s);
  const double cs = std::cos(sigma0);
  const double ss = std::sin(sigma0);
  const double f2 = cs * cs * cs - 1.5 * cs + 0.5;
  return f2 - ss * ss * ss * f1;
}

double q_max(double sigma0) {
  if (!(sigma0 != 0.0 && std::abs(sigma0) < 0.5 * kPi)) {
    throw DomainError("q_max requires 0 < |sigma0| < pi/2");
  }
  const double w = std::cbrt(std::tan(0.5 * sigma0));
  const double w2 = w * w;
  const double w6 = w2 * w2 * w2;
  const double e = w2 + 1.0;
  return -w6 * (w2 + 2.0) / ((1.0 - w2) * e * e * e);
}

double quartic_residual(double theta, double Q1) {
  const double t2 = theta * theta;
  const double value = t2 * t2 + 6.0 * t2 + 8.0 * Q1 * theta - 3.0;
  const double scale = t2 * t2 + 6.0 * t2 + std::abs(8.0 * Q1 * theta) + 3.0;
  return std::abs(value) / scale;
}

ControlPointSolution solve_from_q1(double Q1, double sigma0) {
  if (!(sigma0 != 0.0 && std::abs(sigma0) < 0.5 * kPi)) {
    throw NotApplicable("lense width outside 0 < |sigma| < pi/2");
  }
  if (!std::isfinite(Q1) || std::abs(Q1) > kMaxQ1) {
    throw NotApplicable("reduced invariant Q1 out of range");
  }

  QuarticSolution qs;
  qs.Q1 = Q1;
  qs.m = std::cbrt(1.0 + Q1 * Q1);
  qs.n = std::sqrt(qs.m * qs.m + qs.m + 1.0);
  qs.r1 = (qs.m - 1.0 < 1e-6) ? std::abs(Q1) / qs.n : std::sqrt(qs.m - 1.0);
  qs.r2 = qs.m * kSqrt3 / std::sqrt(2.0 * qs.n + qs.m + 2.0);
  qs.r12 = 3.0 / (2.0 * qs.n + 2.0 * qs.m + 1.0);

  // The root of the opposite sign to sigma0; the difference form avoids
  // subtracting the nearly equal r1 and r2.
  const double sgn = sign(sigma0);
  qs.theta0 = (sigma0 * Q1 < 0.0) ? -qs.r12 / (qs.r1 + qs.r2) * sgn : -(qs.r1 + qs.r2) * sgn;
  qs.xi0 = std::atan(qs.theta0);
  qs.residual = quartic_residual(qs.theta0, Q1);
  if (!(qs.residual <= kMaxResidual)) {
    throw NotApplicable("quartic residual check failed");
  }

  // The point lies near B when xi0 is small; 1 - p is then taken from the
  // factored form  -sin xi (sin s sin xi + 2 cos s cos xi) / (sin(s - 2 xi) (1 + p)).
  const double rho = hyperbola_rho(qs.xi0, sigma0);
  const double c = std::cos(qs.xi0);
  const double s = std::sin(qs.xi0);
  const double p = rho * c;
  const double q = rho * s;
  const double one_plus_p = 1.0 + p;
  double one_minus_p = 1.0 - p;
  if (std::abs(one_minus_p) < 0.5) {
    one_minus_p = -s * (std::sin(sigma0) * s + 2.0 * std::cos(sigma0) * c) /
                  (std::sin(sigma0 - 2.0 * qs.xi0) * one_plus_p);
  }
  return {ParabolicArc::from_offsets(one_plus_p, one_minus_p, q),
          ParabolicArc::from_offsets(one_minus_p, one_plus_p, -q), qs};
}

ControlPointSolution solve_control_points(double Q0, double sigma0) {
  if (!(sigma0 != 0.0 && std::abs(sigma0) < 0.5 * kPi) || !(Q0 <= q_max(sigma0))) {
    throw NotApplicable("(Q0, sigma0) outside the applicability region");
  }
  const double ss = std::sin(sigma0);
  const double half = std::sin(0.5 * sigma0);
  const double Q1 = std::cos(sigma0) / ss + (Q0 - half * half) / (ss * ss * ss);
  return solve_from_q1(Q1, sigma0);
}

ControlPointSolution solve_control_points(const NormalizedProblem& problem) {
  const InvariantPair inv = invariants_of(problem);
  const double sigma0 = inv.sigma;
  if (!(sigma0 != 0.0 && std::abs(sigma0) < 0.5 * kPi) || !(inv.Q <= q_max(sigma0))) {
    throw NotApplicable("problem outside the applicability region");
  }
  const double ss = std::sin(sigma0);
  const double product =
      (problem.a + std::sin(problem.alpha)) * (problem.b - std::sin(problem.beta));
  return solve_from_q1(std::cos(sigma0) / ss + product / (ss * ss * ss), sigma0);
}

}  // namespace rspiral
