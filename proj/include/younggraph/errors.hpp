#pragma once

#include <stdexcept>
#include <string>

namespace younggraph {

/// Raised when a brute-force routine is asked to go past its configured size
/// guard. The message names the guard and the cost that triggered it.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of a verification routine did not hold, as opposed to the
/// verified statement failing.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace younggraph
