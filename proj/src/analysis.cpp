#include "rspiral/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "rspiral/errors.hpp"
#include "rspiral/quadrature.hpp"

namespace rspiral {

namespace {

constexpr double kPi = std::numbers::pi;

bool pencil_angle_in_lense(const Lense& lense, double angle, double tol) {
  const double lo = lense.sigma >= 0.0 ? lense.second.start_tangent : lense.first.start_tangent;
  const double width = std::abs(lense.sigma);
  double d = std::fmod(angle - lo, 2.0 * kPi);
  if (d < 0.0) d += 2.0 * kPi;
  return d <= width + tol || d >= 2.0 * kPi - tol;
}

}  // namespace

double arc_length(const RationalSpiralArc& curve, double t0, double t1) {
  return integrate([&](double t) { return curve.speed(t); }, t0, t1, kArcLengthTolerance);
}

CurvatureProfile curvature_profile(const RationalSpiralArc& curve, int n) {
  if (n < 2) throw DomainError("curvature profile needs at least two samples");
  CurvatureProfile out;
  out.samples.reserve(static_cast<std::size_t>(n));
  double s = 0.0;
  double t_prev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    if (i > 0) s += arc_length(curve, t_prev, t);
    out.samples.push_back({t, s, curve.curvature(t)});
    t_prev = t;
  }
  double kmax = 0.0;
  for (const auto& sample : out.samples) kmax = std::max(kmax, std::abs(sample.k));
  if (assert_monotone(out, 1e-12 * kmax)) {
    out.monotone_direction = out.samples.back().k > out.samples.front().k ? 1 : -1;
  }
  return out;
}

bool assert_monotone(const CurvatureProfile& profile, double slack) {
  const auto& samples = profile.samples;
  if (samples.size() < 2) return false;
  const double total = samples.back().k - samples.front().k;
  if (total == 0.0) return false;
  const double dir = total > 0.0 ? 1.0 : -1.0;
  const std::size_t last = samples.size() - 2;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double delta = samples[i + 1].k - samples[i].k;
    if (dir * delta > 0.0) continue;
    if ((i == 0 || i == last) && slack > 0.0 && std::abs(delta) <= slack) continue;
    return false;
  }
  return true;
}

std::optional<double> find_inflection(const RationalSpiralArc& curve) {
  const double k0 = curve.normalized_jet(0.0).curvature();
  const double k1 = curve.normalized_jet(1.0).curvature();
  // End curvatures are reproduced to about 1e-15 relative; below that they are zero.
  const double zero = 1e-13 * std::max(std::abs(k0), std::abs(k1));
  if (std::abs(k0) <= zero) return 0.0;
  if (std::abs(k1) <= zero) return 1.0;
  if ((k0 > 0.0) == (k1 > 0.0)) return std::nullopt;

  double lo = 0.0;
  double hi = 1.0;
  const bool lo_positive = k0 > 0.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double k = curve.normalized_jet(mid).curvature();
    if (k == 0.0) return mid;
    if ((k > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Point2 CircularArc::point(double u) const {
  if (u <= 0.0) return {-1.0, 0.0};
  if (u >= 1.0) return {1.0, 0.0};
  // Preimage of the ray arg(w) = start_tangent under w = (1 + z) / (1 - z).
  const std::complex<double> w = std::polar(u / (1.0 - u), start_tangent);
  const std::complex<double> den = w + 1.0;
  if (std::abs(den) == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  const std::complex<double> z = (w - 1.0) / den;
  return {z.real(), z.imag()};
}

Lense lense_of(const NormalizedProblem& problem) {
  return {{problem.alpha, -std::sin(problem.alpha)},
          {-problem.beta, std::sin(problem.beta)},
          problem.alpha + problem.beta};
}

double pencil_angle(Point2 z) {
  const std::complex<double> zc{z.x, z.y};
  return std::arg((1.0 + zc) * std::conj(1.0 - zc));
}

bool lense_contains(const Lense& lense, Point2 z, double tol) {
  if (std::hypot(z.x + 1.0, z.y) < 1e-12 || std::hypot(z.x - 1.0, z.y) < 1e-12) return true;
  return pencil_angle_in_lense(lense, pencil_angle(z), tol);
}

bool contains_points_in_lense(std::span<const Point2> points, const Lense& lense, double tol) {
  return std::all_of(points.begin(), points.end(),
                     [&](Point2 z) { return lense_contains(lense, z, tol); });
}

bool contains_in_lense(const RationalSpiralArc& curve, const Lense& lense, int n, double tol) {
  // The chord ends are members; interior samples are tested on their pencil
  // angle taken from the offsets, which keeps its accuracy next to the ends.
  for (int i = 1; i + 1 < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    if (!pencil_angle_in_lense(lense, image_pencil_angle(curve.arc, curve.params, t), tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace rspiral
