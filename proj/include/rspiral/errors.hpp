#pragma once

#include <stdexcept>
#include <string>

namespace rspiral {

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Start and end points coincide (or nearly so).
class DegenerateChord : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the domain of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Boundary data outside the region handled by the parabola-inversion method.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Two circle pairs do not share the inversive invariants (Q, sigma).
class InvariantMismatch : public Error {
 public:
  using Error::Error;
};

/// The two algebraically equivalent expressions for r0 (or lambda0) disagree.
class InconsistentRatio : public Error {
 public:
  using Error::Error;
};

/// Point maps onto the pole of the Moebius transform.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Input curvature elements do not describe the requested configuration.
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

}  // namespace rspiral
