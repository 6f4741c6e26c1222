#pragma once

#include <stdexcept>
#include <string>

namespace basiclab {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Search ran out of nodes before the space was exhausted; distinct from
// a definitive "none exists".
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Odd grid sizes: the lemma machinery covers even m only.
struct UnsupportedOddSize : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScheduleInvariantViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace basiclab
