#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rspiral/geom_invariants.hpp"
#include "rspiral/moebius_map.hpp"
#include "rspiral/parabola_family.hpp"

namespace rspiral {

/// One solution curve: a parabolic arc, inverted by a Moebius map fixing the
/// chord endpoints, then placed by the chord frame. Parameter t runs over [0, 1].
struct RationalSpiralArc {
  ChordFrame frame;
  ParabolicArc arc;
  MoebiusParams params;
  RationalCoeffs coeffs;  ///< in the chord frame
  int solution_index = 1;

  Point2 normalized_point(double t) const { return eval_rational(arc, params, t); }
  CurveJet normalized_jet(double t) const { return rational_jet(arc, params, t); }

  Point2 point(double t) const { return map_back(frame, normalized_point(t)); }
  double tangent_angle(double t) const;
  double curvature(double t) const;
  /// |dP/dt| in world units.
  double speed(double t) const;
  CurvatureElement element(double t) const;
};

struct SolveDiagnostics {
  std::optional<QuarticSolution> quartic;
  /// Max |dk/ds| over each solution (sampled); smaller reads as fairer.
  std::vector<double> fairness;
  /// 1-based index of the solution with the smaller fairness value, 0 if none.
  int fairer_solution = 0;
};

struct SolveOutcome {
  SolvabilityClass classification;
  NormalizedChord chord;
  std::vector<RationalSpiralArc> solutions;  ///< empty or exactly two
  SolveDiagnostics diagnostics;

  bool solvable() const { return classification.tag == Solvability::Solvable; }
};

/// Short spiral with the given curvature elements at its ends. Both solutions
/// are returned when the problem is Solvable; otherwise the outcome carries
/// only the classification. Throws DegenerateChord for coincident endpoints.
SolveOutcome solve_g2_hermite(const CurvatureElement& start, const CurvatureElement& end);

struct SpanProblem {
  CurvatureElement start;
  CurvatureElement end;
};

/// Splits a spiral between two concentric circles at the polar halfway point
/// M on the circle of radius sqrt(R_A R_B). The polar sweep from A to B is
/// taken in the travel direction, in (0, 2 pi], plus `extra_turns` full turns.
/// Throws InvalidGeometry when the circles of curvature are not centred at
/// `center` or have opposite orientation.
std::vector<SpanProblem> subdivide_concentric(const CurvatureElement& start,
                                              const CurvatureElement& end, Point2 center,
                                              int extra_turns = 1);

/// Solves every consecutive pair independently.
std::vector<SolveOutcome> solve_chain(std::span<const CurvatureElement> elements);

}  // namespace rspiral
