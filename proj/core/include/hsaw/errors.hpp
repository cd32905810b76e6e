#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsaw {

// Bad user-facing configuration (flag values, non-hyperbolic parameters).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured vertex budget.
struct BudgetError : std::runtime_error {
  BudgetError(std::string msg, std::uint64_t required)
      : std::runtime_error(std::move(msg)), required_budget(required) {}
  std::uint64_t required_budget;
};

// An internal structural invariant failed; indicates a bug, not bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// A geometric certificate could not be established (e.g. map too small to
// identify the bounded side of a polygon).
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hsaw
