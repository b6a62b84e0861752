#include "rspiral/spiral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rspiral/errors.hpp"

namespace rspiral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFairnessSamples = 201;

double max_curvature_rate(const RationalSpiralArc& curve) {
  double worst = 0.0;
  double k_prev = curve.curvature(0.0);
  const double dt = 1.0 / (kFairnessSamples - 1);
  for (int i = 1; i < kFairnessSamples; ++i) {
    const double t = i * dt;
    const double k = curve.curvature(t);
    const double ds = curve.speed(t - 0.5 * dt) * dt;
    worst = std::max(worst, std::abs(k - k_prev) / ds);
    k_prev = k;
  }
  return worst;
}

}  // namespace

double RationalSpiralArc::tangent_angle(double t) const {
  return wrap_angle(normalized_jet(t).tangent_angle() + frame.mu);
}

double RationalSpiralArc::curvature(double t) const {
  return normalized_jet(t).curvature() / frame.c;
}

double RationalSpiralArc::speed(double t) const { return normalized_jet(t).speed() * frame.c; }

CurvatureElement RationalSpiralArc::element(double t) const {
  const CurveJet jet = normalized_jet(t);
  return map_back_element(frame, CurvatureElement{jet.z.real(), jet.z.imag(), jet.tangent_angle(),
                                          jet.curvature()});
}

SolveOutcome solve_g2_hermite(const CurvatureElement& start, const CurvatureElement& end) {
  SolveOutcome out;
  out.chord = normalize_to_chord(start, end);
  out.classification = classify(out.chord.problem);
  if (!out.solvable()) return out;

  const NormalizedProblem& problem = out.chord.problem;
  try {
    const ControlPointSolution cps = solve_control_points(problem);
    out.diagnostics.quartic = cps.quartic;
    int index = 1;
    for (const ParabolicArc& arc : {cps.first, cps.second}) {
      RationalSpiralArc curve;
      curve.frame = out.chord.frame;
      curve.arc = arc;
      curve.params = params_from_arc(arc, problem);
      curve.coeffs = expand_rational_coeffs(arc, curve.params);
      curve.solution_index = index++;
      out.diagnostics.fairness.push_back(max_curvature_rate(curve));
      out.solutions.push_back(std::move(curve));
    }
  } catch (const Error&) {
    // A post-solve check tripped on data at the edge of the classified
    // region; report it as outside the method's reach.
    out.classification.tag = Solvability::MethodNotApplicable;
    out.solutions.clear();
    out.diagnostics = {};
    return out;
  }
  out.diagnostics.fairer_solution =
      out.diagnostics.fairness[0] <= out.diagnostics.fairness[1] ? 1 : 2;
  return out;
}

std::vector<SpanProblem> subdivide_concentric(const CurvatureElement& start,
                                              const CurvatureElement& end, Point2 center,
                                              int extra_turns) {
  if (start.k == 0.0 || end.k == 0.0 || (start.k > 0.0) != (end.k > 0.0)) {
    throw InvalidGeometry("concentric subdivision needs equally oriented circles");
  }
  if (extra_turns < 0) throw InvalidGeometry("extra_turns must be non-negative");

  auto check_center = [&](const CurvatureElement& e) {
    const double cx = e.x - std::sin(e.tau) / e.k;
    const double cy = e.y + std::cos(e.tau) / e.k;
    const double scale = std::max({1.0, 1.0 / std::abs(e.k), std::hypot(center.x, center.y)});
    if (!(std::hypot(cx - center.x, cy - center.y) <= 1e-9 * scale)) {
      throw InvalidGeometry("circle of curvature is not centred at the given center");
    }
  };
  check_center(start);
  check_center(end);

  const double orient = start.k > 0.0 ? 1.0 : -1.0;
  const double phi_a = std::atan2(start.y - center.y, start.x - center.x);
  const double phi_b = std::atan2(end.y - center.y, end.x - center.x);
  double sweep = std::fmod(orient * (phi_b - phi_a), 2.0 * kPi);
  if (sweep <= 0.0) sweep += 2.0 * kPi;
  sweep += 2.0 * kPi * extra_turns;

  const double radius = std::sqrt(1.0 / (std::abs(start.k) * std::abs(end.k)));
  const double phi_m = phi_a + orient * 0.5 * sweep;
  const CurvatureElement mid{center.x + radius * std::cos(phi_m),
                             center.y + radius * std::sin(phi_m),
                             wrap_angle(phi_m + orient * 0.5 * kPi), orient / radius};
  return {{start, mid}, {mid, end}};
}

std::vector<SolveOutcome> solve_chain(std::span<const CurvatureElement> elements) {
  if (elements.size() < 2) throw InvalidGeometry("a chain needs at least two elements");
  std::vector<SolveOutcome> out;
  out.reserve(elements.size() - 1);
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    out.push_back(solve_g2_hermite(elements[i], elements[i + 1]));
  }
  return out;
}

}  // namespace rspiral
