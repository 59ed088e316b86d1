#pragma once

#include <stdexcept>
#include <string>

namespace polya {

// Factoring gave up: a composite cofactor survived trial division and no
// hint covered it.
class UnfactoredResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquarefree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Continued-fraction state failed to close within the iteration cap.
class PeriodOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cancelled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant the pipeline relies on was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invariant check that survives NDEBUG builds.
inline void ensure(bool condition, const char* message) {
  if (!condition) throw InternalError(message);
}

}  // namespace polya
