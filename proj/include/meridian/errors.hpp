#ifndef MERIDIAN_ERRORS_HPP
#define MERIDIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meridian {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-difference stencil point left the evaluable domain.
struct StencilOutOfDomain : Error {
  using Error::Error;
};

// Tangent vectors failed the Gram-determinant regularity test.
struct DegenerateTangentPlane : Error {
  using Error::Error;
};

// Frenet integration drifted beyond the per-step orthonormality budget.
struct IntegrationStepRejected : Error {
  using Error::Error;
};

// Profile evaluated outside its domain (pole guard or arc-length violation).
struct ProfileDomainError : Error {
  using Error::Error;
};

// The generic normal-frame seed switched across a stencil.
struct GaugeDiscontinuity : Error {
  using Error::Error;
};

// Two independent evaluation routes disagreed beyond the guard tolerance.
struct RouteDisagreement : Error {
  using Error::Error;
};

// Operation requires a meridian payload the surface does not carry.
struct NotAMeridian : Error {
  using Error::Error;
};

// Config document failed to parse or validate.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace meridian

#endif
