#pragma once

#include <stdexcept>
#include <string>

namespace genarr {

// Refusal because an operation would exceed a configured size/work budget.
// The message names the budget that was hit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad partition, bad parameter combination.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal cross-checks that must never fail (exact-division remainders,
// dual-path disagreement). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Geometric-vs-combinatorial disagreement that survived reseeding.
class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genarr
