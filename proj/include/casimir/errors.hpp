#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (R <= 0, omega <= 0,
/// negative dipole strength, non-finite input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quadrature or series failed to reach its requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The undamped resonant formulas are singular at omega_A == omega_B.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The printed high-temperature Lifshitz force hit a pole of tan().
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
