#pragma once

#include <stdexcept>
#include <string>

namespace noon {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// A pulse ratio denominator underflowed to zero at the evaluation point.
class DegeneratePulse : public Error {
 public:
  using Error::Error;
};

/// The dark-state normalization constant underflowed (all couplings off).
class DegenerateDarkState : public Error {
 public:
  using Error::Error;
};

/// A non-dark eigenvalue fell below tolerance in an adiabaticity ratio.
class DegenerateGap : public Error {
 public:
  using Error::Error;
};

/// Requested Fock cutoff exceeds the supported basis size.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Integrator norm drift exceeded tolerance in a Hermitian run.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Protocol step applied to a register in the wrong state.
class ProtocolOrderError : public Error {
 public:
  using Error::Error;
};

/// A protocol step failed; the message carries the step index.
class ProtocolStepError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace noon
