#include "rspiral/moebius_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rspiral/errors.hpp"

namespace rspiral {

namespace {

constexpr double kPairTolerance = 1e-9;
constexpr double kAnchorTolerance = 1e-12;

using CPoly2 = std::array<Complex, 3>;
using CPoly4 = std::array<Complex, 5>;

// z + 1 and z - 1 on the parabola, factored so that neither cancels near
// the chord endpoints (or when P is close to one of them).
struct EndpointOffsets {
  Complex u;
  Complex v;
};

EndpointOffsets offsets_at(const ParabolicArc& arc, double t) {
  const double s = 1.0 - t;
  return {2.0 * t * Complex(arc.u1 * s + t, arc.q * s),
          -2.0 * s * Complex(arc.u2 * t + s, -arc.q * t)};
}

CPoly4 mul_conj(const CPoly2& lhs, const CPoly2& rhs) {
  CPoly4 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i + j] += lhs[i] * std::conj(rhs[j]);
  }
  return out;
}

MoebiusParams params_from_factors(const NormalizedProblem& src, double src_fa, double src_fb,
                                  const NormalizedProblem& dst) {
  const double sigma_src = src.alpha + src.beta;
  const double sigma_dst = dst.alpha + dst.beta;
  if (!(std::abs(sigma_src - sigma_dst) <= kPairTolerance)) {
    throw InvariantMismatch("circle pairs have different lense widths");
  }
  const double dst_fa = dst.a + std::sin(dst.alpha);
  const double dst_fb = dst.b - std::sin(dst.beta);
  const double hs = std::sin(0.5 * sigma_src);
  const double hd = std::sin(0.5 * sigma_dst);
  const double q_src = src_fa * src_fb + hs * hs;
  const double q_dst = dst_fa * dst_fb + hd * hd;
  if (!(std::abs(q_src - q_dst) <= kPairTolerance * std::max({1.0, std::abs(q_src), std::abs(q_dst)}))) {
    throw InvariantMismatch("circle pairs have different invariant Q");
  }

  const double lambda0 = wrap_angle(dst.alpha - src.alpha);
  const double lambda_alt = src.beta - dst.beta;
  if (!(std::abs(wrap_angle(lambda0 - lambda_alt)) <= kPairTolerance)) {
    throw InconsistentRatio("rotation angles at the two anchors disagree");
  }
  const double r0 = src_fa / dst_fa;
  const double r0_alt = dst_fb / src_fb;
  if (!(r0 > 0.0) || !std::isfinite(r0) ||
      !(std::abs(r0 - r0_alt) <= kPairTolerance * std::max(r0, std::abs(r0_alt)))) {
    throw InconsistentRatio("scale factors at the two anchors disagree");
  }
  return {r0, lambda0};
}

}  // namespace

MoebiusParams MoebiusParams::from_z0(Complex z0) {
  if (std::abs(z0 - 1.0) == 0.0 || std::abs(z0 + 1.0) == 0.0) {
    throw DomainError("z0 must differ from +1 and -1");
  }
  const Complex w = (1.0 + z0) / (1.0 - z0);
  return {std::abs(w), std::arg(w)};
}

std::optional<Complex> MoebiusParams::z0() const {
  const Complex w = derivative_at_start();
  if (std::abs(w + 1.0) < 1e-12) return std::nullopt;
  return (w - 1.0) / (w + 1.0);
}

MoebiusParams params_from_pairs(const NormalizedProblem& src, const NormalizedProblem& dst) {
  return params_from_factors(src, src.a + std::sin(src.alpha), src.b - std::sin(src.beta), dst);
}

MoebiusParams params_from_arc(const ParabolicArc& arc, const NormalizedProblem& dst) {
  const BoundaryFactors f = boundary_factors(arc);
  return params_from_factors(boundary_data(arc), f.start, f.end, dst);
}

Point2 apply_moebius(Point2 point, const MoebiusParams& params) {
  const Complex z{point.x, point.y};
  const std::optional<Complex> z0 = params.z0();
  Complex image;
  if (z0) {
    const Complex den = 1.0 + *z0 * z;
    if (std::abs(den) < 1e-14 * (1.0 + std::abs(*z0) * std::abs(z))) {
      throw PoleError("point maps to infinity");
    }
    image = (z + *z0) / den;
  } else {
    if (std::abs(z) < 1e-14) throw PoleError("point maps to infinity");
    image = 1.0 / z;
  }
  return {image.real(), image.imag()};
}

CurvatureElement transform_circle(const CurvatureElement& circle, const MoebiusParams& params) {
  if (std::abs(circle.y) > kAnchorTolerance) {
    throw DomainError("circle of curvature must be anchored at (-1, 0) or (1, 0)");
  }
  if (std::abs(circle.x + 1.0) <= kAnchorTolerance) {
    const double alpha = circle.tau + params.lambda0;
    const double a = (circle.k + std::sin(circle.tau)) / params.r0 - std::sin(alpha);
    return {-1.0, 0.0, wrap_angle(alpha), a};
  }
  if (std::abs(circle.x - 1.0) <= kAnchorTolerance) {
    const double beta = circle.tau - params.lambda0;
    const double b = params.r0 * (circle.k - std::sin(circle.tau)) + std::sin(beta);
    return {1.0, 0.0, wrap_angle(beta), b};
  }
  throw DomainError("circle of curvature must be anchored at (-1, 0) or (1, 0)");
}

Point2 eval_rational(const ParabolicArc& arc, const MoebiusParams& params, double t) {
  // (z + 1) conj(z - 1) = (x^2 + y^2 - 1) - 2 i y
  const auto [u, v] = offsets_at(arc, t);
  const Complex uv = u * std::conj(v);
  const double y = -0.5 * uv.imag();
  const double rr = uv.real();  // x^2 + y^2 - 1
  const double r0 = params.r0;
  const double cl = std::cos(params.lambda0);
  const double sl = std::sin(params.lambda0);
  const double l1 = std::norm(u);
  const double l2 = std::norm(v);
  const double num_x = r0 * r0 * l1 - l2;
  const double num_y = 2.0 * r0 * (2.0 * y * cl - rr * sl);
  const double den = r0 * r0 * l1 - 2.0 * r0 * (2.0 * y * sl + rr * cl) + l2;
  return {num_x / den, num_y / den};
}

double image_pencil_angle(const ParabolicArc& arc, const MoebiusParams& params, double t) {
  // (1 + W) conj(1 - W) = -4 w u conj(v) / |D|^2
  const auto [u, v] = offsets_at(arc, t);
  return wrap_angle(params.lambda0 + std::numbers::pi + std::arg(u * std::conj(v)));
}

CurveJet rational_jet(const ParabolicArc& arc, const MoebiusParams& params, double t) {
  const Complex P{arc.p, arc.q};
  const Complex dz = 2.0 * Complex(arc.u1, arc.q) * (1.0 - t) + 2.0 * Complex(arc.u2, -arc.q) * t;
  const Complex ddz = -4.0 * P;

  // W = (w u + v) / (w u - v) with u = z + 1, v = z - 1, D = w u - v.
  const Complex w = params.derivative_at_start();
  const auto [u, v] = offsets_at(arc, t);
  // w / D and 1 / D, each formed without cancellation.
  Complex w_over_d;
  Complex inv_d;
  double abs_d2;
  if (params.r0 >= 1.0) {
    const Complex e = u - v / w;
    w_over_d = 1.0 / e;
    inv_d = w_over_d / w;
    abs_d2 = params.r0 * params.r0 * std::norm(e);
  } else {
    const Complex den = w * u - v;
    inv_d = 1.0 / den;
    w_over_d = w * inv_d;
    abs_d2 = std::norm(den);
  }
  const Complex dW = 4.0 * w_over_d * inv_d;
  const Complex ddW = -8.0 * (w_over_d - inv_d) * w_over_d * inv_d;
  const Complex d1 = dW * dz;
  const Complex d2 = ddW * dz * dz + dW * ddz;

  // Curvature through the transformation law
  //   k* = (k - 2 Im((w - 1) T / D)) / |W'|,
  // since d1 and d2 alone lose the normal component when |W'| is extreme.
  const Complex T = dz / std::abs(dz);
  const double bend = (w_over_d * T).imag() - (inv_d * T).imag();
  const double k = (parabola_curvature(arc, t) - 2.0 * bend) * abs_d2 / (4.0 * params.r0);
  return {(w * u + v) * inv_d, d1, d2, k};
}

RationalCoeffs expand_rational_coeffs(const ParabolicArc& arc, const MoebiusParams& params) {
  const Complex P{arc.p, arc.q};
  const Complex w = params.derivative_at_start();
  // z(t) = -1 + 2 (1 + P) t - 2 P t^2
  const Complex one_plus_p{arc.u1, arc.q};
  const CPoly2 u{0.0, 2.0 * one_plus_p, -2.0 * P};
  const CPoly2 v{-2.0, 2.0 * one_plus_p, -2.0 * P};
  CPoly2 num{};
  CPoly2 den{};
  for (std::size_t i = 0; i < 3; ++i) {
    num[i] = w * u[i] + v[i];
    den[i] = w * u[i] - v[i];
  }
  const CPoly4 n = mul_conj(num, den);
  const CPoly4 d = mul_conj(den, den);
  // den(0) = |v(0)|^2 = 4
  RationalCoeffs out;
  for (std::size_t i = 0; i < 5; ++i) {
    out.x.c[i] = 0.25 * n[i].real();
    out.y.c[i] = 0.25 * n[i].imag();
    out.den.c[i] = 0.25 * d[i].real();
  }
  return out;
}

RationalBezier to_rational_bezier(const RationalCoeffs& coeffs) {
  constexpr std::array<double, 5> binom4{1.0, 4.0, 6.0, 4.0, 1.0};
  auto to_bernstein = [&](const Poly4& poly) {
    std::array<double, 5> out{};
    for (std::size_t i = 0; i < 5; ++i) {
      double binom_ij = 1.0;  // C(i, j)
      for (std::size_t j = 0; j <= i; ++j) {
        out[i] += binom_ij / binom4[j] * poly.c[j];
        binom_ij = binom_ij * static_cast<double>(i - j) / static_cast<double>(j + 1);
      }
    }
    return out;
  };
  const auto bx = to_bernstein(coeffs.x);
  const auto by = to_bernstein(coeffs.y);
  RationalBezier out;
  out.weights = to_bernstein(coeffs.den);
  for (std::size_t i = 0; i < 5; ++i) {
    out.points[i] = {bx[i] / out.weights[i], by[i] / out.weights[i]};
    out.weighted[i] = {bx[i], by[i]};
  }
  return out;
}

RationalBezier to_rational_bezier(const ParabolicArc& arc, const MoebiusParams& params) {
  // Quadratic Bernstein coefficients of u = z + 1 and v = z - 1 are
  // (0, 1 + P, 2) and (-2, P - 1, 0); the degree-4 products follow from
  // B_i^2 B_j^2 = C(2,i) C(2,j) / C(4,i+j) B_{i+j}^4.
  const Complex w = params.derivative_at_start();
  const std::array<Complex, 3> u{0.0, Complex(arc.u1, arc.q), 2.0};
  const std::array<Complex, 3> v{-2.0, -Complex(arc.u2, -arc.q), 0.0};
  std::array<Complex, 3> num{};
  std::array<Complex, 3> den{};
  for (std::size_t i = 0; i < 3; ++i) {
    num[i] = w * u[i] + v[i];
    den[i] = w * u[i] - v[i];
  }
  constexpr std::array<double, 3> binom2{1.0, 2.0, 1.0};
  constexpr std::array<double, 5> binom4{1.0, 4.0, 6.0, 4.0, 1.0};
  std::array<Complex, 5> n{};
  std::array<double, 5> d{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double f = binom2[i] * binom2[j] / binom4[i + j];
      n[i + j] += f * num[i] * std::conj(den[j]);
      d[i + j] += f * (den[i] * std::conj(den[j])).real();
    }
  }
  RationalBezier out;
  for (std::size_t k = 0; k < 5; ++k) {
    out.weights[k] = 0.25 * d[k];
    out.points[k] = {n[k].real() / d[k], n[k].imag() / d[k]};
    out.weighted[k] = {0.25 * n[k].real(), 0.25 * n[k].imag()};
  }
  return out;
}

Point2 eval_rational_bezier(const RationalBezier& rb, double t) {
  // de Casteljau on homogeneous coordinates.
  std::array<double, 5> hx{};
  std::array<double, 5> hy{};
  std::array<double, 5> hw = rb.weights;
  for (std::size_t k = 0; k < 5; ++k) {
    hx[k] = rb.weighted[k].x;
    hy[k] = rb.weighted[k].y;
  }
  for (std::size_t level = 4; level > 0; --level) {
    for (std::size_t k = 0; k < level; ++k) {
      hx[k] = (1.0 - t) * hx[k] + t * hx[k + 1];
      hy[k] = (1.0 - t) * hy[k] + t * hy[k + 1];
      hw[k] = (1.0 - t) * hw[k] + t * hw[k + 1];
    }
  }
  return {hx[0] / hw[0], hy[0] / hw[0]};
}

}  // namespace rspiral
