#pragma once

#include <stdexcept>
#include <string>

namespace expanderlab {

/// Raised when an argument lies outside the domain of an operation
/// (zero inverse, element outside a table's domain, modulus mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A graph rule whose edge relation is not regular.
class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative eigensolver hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expanderlab
