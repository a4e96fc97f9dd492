#ifndef LIEHOM_ERRORS_HPP
#define LIEHOM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liehom {

/// Incompatible shapes in matrix/vector arithmetic or operation inputs.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A predicted allocation exceeded the configured budget (CLI exit code 2).
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::int64_t predicted_, std::int64_t budget_)
      : std::runtime_error("predicted size " + std::to_string(predicted_) +
                           " exceeds budget " + std::to_string(budget_)),
        predicted(predicted_),
        budget(budget_) {}
  std::int64_t predicted;
  std::int64_t budget;
};

/// An identity the implementation guarantees failed to hold, e.g. a nonzero
/// composite of consecutive boundaries (CLI exit code 3).
struct InternalCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file (CLI exit code 1).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace liehom

#endif
