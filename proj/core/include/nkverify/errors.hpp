#pragma once

#include <stdexcept>
#include <string>

namespace nkv {

/// Input outside an operation's domain (non-unit quaternion, zero inverse,
/// non-Lagrangian immersion, rejected frame state, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested value lies on a branch cut (e.g. log of the antipode -1).
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Finite-difference or iterative numerics could not produce a usable value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nkv
