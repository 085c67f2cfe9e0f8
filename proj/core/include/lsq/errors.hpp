#pragma once

#include <stdexcept>
#include <string>

namespace lsq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failures of the numerical contracts, as opposed to configuration or I/O
// problems; the CLI maps these to exit code 1.
struct NumericalError : Error {
  using Error::Error;
};

// Steady-state solve rejected: the 8x8 generator is numerically singular
// (e.g. undriven atom, where the stationary state is not unique).
struct SingularLiouvillian : NumericalError {
  using NumericalError::NumericalError;
};

// Fixed-step integrator would be unstable for the requested step.
struct StepSizeTooLarge : NumericalError {
  using NumericalError::NumericalError;
};

// Conjugate pairing of the coherence vector violated beyond tolerance.
struct NotHermitian : NumericalError {
  using NumericalError::NumericalError;
};

// (i*omega - L) or (-i*omega - L) numerically singular (marginal stability).
struct ResolventSingular : NumericalError {
  using NumericalError::NumericalError;
};

// Two-time correlation has not decayed below threshold at the horizon.
struct HorizonTooShort : NumericalError {
  using NumericalError::NumericalError;
};

// Two dressed eigenvalues coincide; expansion coefficients ill-conditioned.
struct DegenerateSpectrum : NumericalError {
  using NumericalError::NumericalError;
};

// Closed-form squeezing parameter requested outside its validity regime
// (resonant fields with equal Rabi frequencies on the optical transitions).
struct OutsideAnalyticRegime : NumericalError {
  using NumericalError::NumericalError;
};

// Config text could not be parsed; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

// A parsed value violates a contract; carries the offending key/field name.
struct ValidationError : Error {
  ValidationError(std::string key_name, const std::string& message)
      : Error(key_name + ": " + message), key(std::move(key_name)) {}
  std::string key;
};

}  // namespace lsq
