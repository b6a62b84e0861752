#pragma once

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rspiral {

namespace detail {

template <class F>
double integrate_recursive(const F& f, double a, double b, double rel_tol, double abs_tol,
                           int depth) {
  double err = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err);
  // The single-rule error estimate refers to [-1, 1]; rescale it to [a, b].
  err *= 0.5 * std::abs(b - a);
  if (depth <= 0 || err <= abs_tol || err <= rel_tol * std::abs(value)) return value;
  const double mid = 0.5 * (a + b);
  return integrate_recursive(f, a, mid, rel_tol, 0.5 * abs_tol, depth - 1) +
         integrate_recursive(f, mid, b, rel_tol, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Gauss-Kronrod (7/15) rule applied by recursive bisection until each piece
/// meets rel_tol against its own value or its share of abs_tol. Boost's own driver fixes an absolute
/// target from the first whole-interval estimate, which stalls on the sharply
/// peaked speeds of strongly inverted arcs.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                 int max_depth = 40) {
  if (a == b) return 0.0;
  return detail::integrate_recursive(f, a, b, rel_tol, abs_tol, max_depth);
}

}  // namespace rspiral
