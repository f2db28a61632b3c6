#pragma once

#include <stdexcept>
#include <string>

namespace angelesco {

/// Parameters violate a domain constraint (|c| >= 1, Gamma pole, ...).
struct ParamDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Argument hits a pole of the Gamma function.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Iterative procedure failed to converge.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateNodeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Moment system for a multi-index is (numerically) rank deficient.
struct NotNormalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByNearZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingNeighborError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace angelesco
