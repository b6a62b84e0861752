#include "rspiral/geom_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rspiral/errors.hpp"
#include "rspiral/parabola_family.hpp"

namespace rspiral {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string_view to_string(Solvability tag) {
  switch (tag) {
    case Solvability::NoSpiral:
      return "NoSpiral";
    case Solvability::BiarcOnly:
      return "BiarcOnly";
    case Solvability::NoShortSpiral:
      return "NoShortSpiral";
    case Solvability::MethodNotApplicable:
      return "MethodNotApplicable";
    case Solvability::Solvable:
      return "Solvable";
  }
  return "Unknown";
}

double wrap_angle(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

NormalizedProblem canonicalize(const NormalizedProblem& problem) {
  NormalizedProblem out = problem;
  out.alpha = wrap_angle(out.alpha);
  out.beta = wrap_angle(out.beta);
  if (out.a > out.b) {
    if (out.alpha == kPi) out.alpha = -kPi;
    if (out.beta == kPi) out.beta = -kPi;
  }
  return out;
}

NormalizedChord normalize_to_chord(const CurvatureElement& start, const CurvatureElement& end) {
  const double dx = end.x - start.x;
  const double dy = end.y - start.y;
  const double dist = std::hypot(dx, dy);
  const double scale =
      std::max({1.0, std::hypot(start.x, start.y), std::hypot(end.x, end.y)});
  if (!(dist > kDegenerateChordRel * scale)) {
    throw DegenerateChord("start and end points coincide");
  }
  NormalizedChord out;
  out.frame.c = 0.5 * dist;
  out.frame.mu = std::atan2(dy, dx);
  out.frame.origin = {0.5 * (start.x + end.x), 0.5 * (start.y + end.y)};
  out.problem = canonicalize({.alpha = start.tau - out.frame.mu,
                              .beta = end.tau - out.frame.mu,
                              .a = start.k * out.frame.c,
                              .b = end.k * out.frame.c});
  return out;
}

Point2 map_back(const ChordFrame& frame, Point2 p) {
  const double cs = std::cos(frame.mu);
  const double sn = std::sin(frame.mu);
  return {frame.origin.x + frame.c * (cs * p.x - sn * p.y),
          frame.origin.y + frame.c * (sn * p.x + cs * p.y)};
}

Point2 map_to_frame(const ChordFrame& frame, Point2 p) {
  const double cs = std::cos(frame.mu);
  const double sn = std::sin(frame.mu);
  const double dx = p.x - frame.origin.x;
  const double dy = p.y - frame.origin.y;
  return {(cs * dx + sn * dy) / frame.c, (-sn * dx + cs * dy) / frame.c};
}

CurvatureElement map_back_element(const ChordFrame& frame, const CurvatureElement& normalized) {
  const Point2 p = map_back(frame, Point2{normalized.x, normalized.y});
  return {p.x, p.y, wrap_angle(normalized.tau + frame.mu), normalized.k / frame.c};
}

InvariantPair invariants_of(const NormalizedProblem& problem) {
  const double sigma = problem.alpha + problem.beta;
  const double half = std::sin(0.5 * sigma);
  const double Q =
      (problem.a + std::sin(problem.alpha)) * (problem.b - std::sin(problem.beta)) + half * half;
  return {Q, sigma};
}

SolvabilityClass classify(const NormalizedProblem& problem) {
  const NormalizedProblem p = canonicalize(problem);
  SolvabilityClass out;
  out.invariants = invariants_of(p);
  const double Q = out.invariants.Q;
  const double sigma = out.invariants.sigma;
  if (sigma != 0.0 && std::abs(sigma) < 0.5 * kPi) out.q_max = q_max(sigma);

  if (Q > kBiarcTolerance) {
    out.tag = Solvability::NoSpiral;
  } else if (Q >= -kBiarcTolerance) {
    out.tag = Solvability::BiarcOnly;
  } else if (p.a == p.b || sigma == 0.0 || (sigma > 0.0) != (p.b > p.a)) {
    out.tag = Solvability::NoShortSpiral;
  } else if (!out.q_max || Q > *out.q_max) {
    out.tag = Solvability::MethodNotApplicable;
  } else {
    out.tag = Solvability::Solvable;
  }
  return out;
}

}  // namespace rspiral
