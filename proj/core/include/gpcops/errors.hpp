#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpcops {

// Each error kind maps onto one CLI exit code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter-domain and precondition violations (bad (n,k), non-tree input, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("state budget exceeded: need " + std::to_string(required) +
                           " states, budget " + std::to_string(budget)),
        required_states(required),
        budget_states(budget) {}

  std::uint64_t required_states;
  std::uint64_t budget_states;
};

// A lifted move or lead reselection left the finite cover window.
// Callers re-center and retry.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gpcops
