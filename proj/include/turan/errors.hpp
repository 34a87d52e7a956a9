#pragma once

#include <stdexcept>

namespace turan {

/// Argument outside a function's real domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Caller broke an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs do not satisfy the hypotheses of the result being checked.
class HypothesisViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A series failed to meet its truncation rule within the term cap.
class NonConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace turan
