// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace chirpdnp {

/// Base class for all errors raised by the simulation library.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : SimError {
  using SimError::SimError;
};

struct NonHermitianObservable : SimError {
  using SimError::SimError;
};

struct NonHermitianHamiltonian : SimError {
  using SimError::SimError;
};

/// Raised when Tr[O rho] acquires an imaginary part beyond tolerance,
/// which signals a corrupted (non-Hermitian) state.
struct ImaginaryResidue : SimError {
  using SimError::SimError;
};

struct TimeOutOfRange : SimError {
  using SimError::SimError;
};

struct ZeroNuclearLarmor : SimError {
  using SimError::SimError;
};

/// No real matching offset exists when omega1 >= omega0n.
struct AmplitudeExceedsNuclearLarmor : SimError {
  using SimError::SimError;
};

struct NonPositiveRate : SimError {
  using SimError::SimError;
};

struct NonPositiveT2 : SimError {
  using SimError::SimError;
};

struct ConvergenceFailure : SimError {
  ConvergenceFailure(const std::string& msg, double prev, double last)
      : SimError(msg), previous_value(prev), last_value(last) {}
  double previous_value;
  double last_value;
};

/// A repeated-sweep window that includes the ZQ matching offset would run a
/// full integrated sweep instead of the single-transition experiment.
struct WindowCoversZQ : SimError {
  using SimError::SimError;
};

struct ParseError : SimError {
  ParseError(const std::string& msg, const std::string& where = "")
      : SimError(where.empty() ? msg : where + ": " + msg), position(where) {}
  std::string position;
};

struct ValidationError : SimError {
  ValidationError(const std::string& field_, const std::string& reason_)
      : SimError(field_ + ": " + reason_), field(field_), reason(reason_) {}
  std::string field;
  std::string reason;
};

}  // namespace chirpdnp
