#pragma once

#include <stdexcept>

namespace qcat {

/// Invalid input or out-of-domain argument. Maps to CLI exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration was asked to exceed its explicit size guard. Maps to CLI
/// exit code 3.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check that must hold by construction failed. Maps to
/// CLI exit code 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcat
