#pragma once

#include <array>
#include <complex>
#include <optional>

#include "rspiral/geom_invariants.hpp"
#include "rspiral/parabola_family.hpp"

namespace rspiral {

using Complex = std::complex<double>;

/// Moebius map W(z) = (z + z0) / (1 + z0 z) fixing -1 and +1, stored as
/// W'(-1) = r0 exp(i lambda0). The pair stays finite when z0 is infinite.
struct MoebiusParams {
  double r0 = 1.0;
  double lambda0 = 0.0;

  static MoebiusParams identity() { return {}; }
  /// Throws DomainError for z0 = +1 or -1.
  static MoebiusParams from_z0(Complex z0);

  Complex derivative_at_start() const { return std::polar(r0, lambda0); }
  /// (w - 1) / (w + 1) with w = r0 exp(i lambda0); empty when |w + 1| < 1e-12.
  std::optional<Complex> z0() const;
};

/// Parameters mapping the circle pair `src` onto `dst`. Both must share
/// sigma and Q (InvariantMismatch otherwise); the two expressions for
/// lambda0 and for r0 are cross-checked (InconsistentRatio).
MoebiusParams params_from_pairs(const NormalizedProblem& src, const NormalizedProblem& dst);

/// Same, with the source factors taken from a parabolic arc in cancellation-free form.
MoebiusParams params_from_arc(const ParabolicArc& arc, const NormalizedProblem& dst);

/// W(z) = (z + z0) / (1 + z0 z); W(z) = 1/z when z0 is infinite.
/// Throws PoleError near the pole z = -1/z0.
Point2 apply_moebius(Point2 z, const MoebiusParams& params);

/// Image of a circle of curvature anchored at (-1, 0) or (1, 0).
/// Throws DomainError for any other anchor.
CurvatureElement transform_circle(const CurvatureElement& circle, const MoebiusParams& params);

/// Point of the inverted parabola, written in (r0, lambda0) so it stays
/// valid for infinite z0.
Point2 eval_rational(const ParabolicArc& arc, const MoebiusParams& params, double t);

/// arg((1 + W) conj(1 - W)) at the image of parabola parameter t in (0, 1),
/// formed from the offsets to the chord ends so it stays accurate next to them.
double image_pencil_angle(const ParabolicArc& arc, const MoebiusParams& params, double t);

/// Position and first two parametric derivatives of a planar curve.
struct CurveJet {
  Complex z;
  Complex d1;
  Complex d2;
  double k = 0.0;  ///< signed curvature

  double tangent_angle() const { return std::arg(d1); }
  double speed() const { return std::abs(d1); }
  double curvature() const { return k; }
};

/// Analytic jet of the inverted parabola via the chain rule on W.
CurveJet rational_jet(const ParabolicArc& arc, const MoebiusParams& params, double t);

/// Monomial-basis polynomial of degree <= 4, coefficients by ascending power.
struct Poly4 {
  std::array<double, 5> c{};

  double operator()(double t) const {
    return (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0];
  }
};

/// X(t) = x(t) / den(t), Y(t) = y(t) / den(t), scaled so den(0) = 1.
struct RationalCoeffs {
  Poly4 x;
  Poly4 y;
  Poly4 den;

  Point2 eval(double t) const {
    const double d = den(t);
    return {x(t) / d, y(t) / d};
  }
};

RationalCoeffs expand_rational_coeffs(const ParabolicArc& arc, const MoebiusParams& params);

/// Degree-4 rational Bezier form: control points and weights. A zero weight
/// yields a non-finite control point (a point at infinity).
struct RationalBezier {
  std::array<Point2, 5> points;
  std::array<double, 5> weights{};
  std::array<Point2, 5> weighted;  ///< weight times point; finite for zero weights
};

RationalBezier to_rational_bezier(const RationalCoeffs& coeffs);
/// Bernstein form built directly from the arc; better conditioned than the
/// monomial route when the end weights differ by many orders of magnitude.
RationalBezier to_rational_bezier(const ParabolicArc& arc, const MoebiusParams& params);
Point2 eval_rational_bezier(const RationalBezier& rb, double t);

}  // namespace rspiral
