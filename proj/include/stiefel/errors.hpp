#pragma once

#include <stdexcept>

namespace stiefel {

/// An argument lies outside the range where an operation is defined,
/// e.g. k > n, or an invalid weight.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes of matrices or partitions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-defined but too large for the chosen method
/// (brute-force path enumeration, symbolic integration).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent routes disagreed, or a quantity that must be integral
/// was not. Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stiefel
