#pragma once

#include <optional>
#include <string_view>

namespace rspiral {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

/// A point with tangent angle and signed curvature; k == 0 encodes a line.
struct CurvatureElement {
  double x = 0.0;
  double y = 0.0;
  double tau = 0.0;  ///< tangent angle, radians
  double k = 0.0;    ///< signed curvature, 1/length
};

/// Similarity taking the chord [-1, 1] on the x-axis to the original chord.
struct ChordFrame {
  double c = 1.0;   ///< half-chord length
  double mu = 0.0;  ///< chord direction
  Point2 origin;    ///< chord midpoint
};

/// Boundary data on the chord [-1, 1]; curvatures are multiplied by c.
struct NormalizedProblem {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
};

struct InvariantPair {
  double Q = 0.0;
  double sigma = 0.0;
};

enum class Solvability {
  NoSpiral,
  BiarcOnly,
  NoShortSpiral,
  MethodNotApplicable,
  Solvable,
};

std::string_view to_string(Solvability tag);

struct SolvabilityClass {
  Solvability tag = Solvability::NoSpiral;
  InvariantPair invariants;
  /// Applicability bound for sigma; absent when |sigma| is 0 or >= pi/2.
  std::optional<double> q_max;
};

struct NormalizedChord {
  ChordFrame frame;
  NormalizedProblem problem;
};

/// |Q| at or below this value is treated as the biarc case.
inline constexpr double kBiarcTolerance = 1e-9;
/// Relative chord length below which endpoints are considered coincident.
inline constexpr double kDegenerateChordRel = 1e-12;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Moves a +pi boundary angle to -pi when curvature decreases (a > b).
/// Angles must already be in (-pi, pi].
NormalizedProblem canonicalize(const NormalizedProblem& problem);

/// Maps both elements into the chord frame and canonicalizes the angles.
/// Throws DegenerateChord when the endpoints coincide.
NormalizedChord normalize_to_chord(const CurvatureElement& start, const CurvatureElement& end);

Point2 map_back(const ChordFrame& frame, Point2 p);
Point2 map_to_frame(const ChordFrame& frame, Point2 p);

/// Tangent angle and curvature from the chord frame back to world coordinates.
CurvatureElement map_back_element(const ChordFrame& frame, const CurvatureElement& normalized);

/// Q = (a + sin alpha)(b - sin beta) + sin^2(sigma / 2), sigma = alpha + beta.
InvariantPair invariants_of(const NormalizedProblem& problem);

/// Solvability checks in order: Q sign, short-spiral condition, method bounds.
SolvabilityClass classify(const NormalizedProblem& problem);

}  // namespace rspiral
