#pragma once

#include <stdexcept>
#include <string>

namespace morreykit {

// A value or index lies outside the set where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request would exceed a configured size limit.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A norm supremum cannot be certified exact with the weights provided.
class UncertifiedDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

// The Calderon-Zygmund descent found no level where all averages are <= t.
class NoStoppingLevel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace morreykit
