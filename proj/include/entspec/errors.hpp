#pragma once

#include <stdexcept>
#include <string>

namespace entspec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The model point sits on (or too close to) a critical line.
class CriticalInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A size limit (table length, Hilbert space, level count) was exceeded.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An iterative or quadrature routine failed to reach its target accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural numeric check failed (e.g. eigenvalue pairing).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entspec
