#pragma once

#include <stdexcept>
#include <string>

namespace landau {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Sequence index above the memoization cap.
struct IndexTooLarge : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Parameters the implementation refuses to handle (conditioning, range).
struct Unsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed spline data: knot order, piece count, spacing.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A constructor precondition failed; the message names the inequality.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical solver gave up (iteration cap, no feasible candidate).
struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace landau
