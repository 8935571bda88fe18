#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

// Bad rings, mismatched operands, out-of-range arguments.
struct RingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// (p, n, f) outside the configured blow-up budget.
struct BudgetError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact division by p^i failed inside a ghost solve. Retryable by callers
// that control the lift precision.
struct IntegralityError : std::runtime_error {
  int index;
  explicit IntegralityError(int idx)
      : std::runtime_error("ghost entry not integral at index " + std::to_string(idx)),
        index(idx) {}
};

// Precision failures: insufficient series expansion order, or an
// IntegralityError that persisted at maximal slack.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariant violations that indicate a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wittlab
