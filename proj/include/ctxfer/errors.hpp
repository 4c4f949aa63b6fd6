#pragma once

#include <stdexcept>
#include <string>

namespace ctxfer {

// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector with (near-)zero norm where a unit vector is required.
struct ZeroNorm : Error {
  using Error::Error;
};

// Supplied matrix is not Hermitian within tolerance.
struct NotHermitian : Error {
  using Error::Error;
};

// Supplied matrix has an eigenvalue below the positivity tolerance.
struct NotPositive : Error {
  using Error::Error;
};

// Supplied matrix trace deviates from 1 beyond tolerance.
struct BadTrace : Error {
  using Error::Error;
};

// Probability came out below the rounding tolerance; signals a logic error
// upstream, not a rounding artifact.
struct NegativeProbability : Error {
  using Error::Error;
};

// Reflectivity outside the open interval (0,1).
struct DegenerateReflectivity : Error {
  using Error::Error;
};

// Beam splitter inputs are not an orthonormal pair.
struct NonOrthogonalInputs : Error {
  using Error::Error;
};

// The two dark-port vectors do not span a plane; no unique state is
// orthogonal to both.
struct DegenerateKernel : Error {
  using Error::Error;
};

// A context's probabilities do not sum to 1; the path table is corrupted.
struct ContextSumViolation : Error {
  using Error::Error;
};

// Postselection probability is (numerically) zero; the conditional value
// is undefined rather than zero or infinite.
struct ImpossiblePostselection : Error {
  using Error::Error;
};

// Probe coupling angle outside the weak regime.
struct CouplingTooLarge : Error {
  using Error::Error;
};

// Malformed textual input (amplitude list, flag value, state file).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ctxfer
