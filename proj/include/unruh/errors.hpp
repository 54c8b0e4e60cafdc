#pragma once

#include <stdexcept>
#include <string>

namespace unruh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An extrapolation sequence failed to settle to the requested tolerance.
class NonConvergence : public Error {
public:
  using Error::Error;
};

/// Adaptive or oscillatory quadrature could not meet its error budget.
class QuadratureFailure : public Error {
public:
  using Error::Error;
};

/// Cutoff frequency too close to the level gap for a meaningful shift.
class CutoffTooSmall : public DomainError {
public:
  using DomainError::DomainError;
};

/// Effective temperature requested on a worldline without excitation.
class InertialNoTemperature : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace unruh
