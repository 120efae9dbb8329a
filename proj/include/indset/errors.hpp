#pragma once

#include <stdexcept>
#include <string>

namespace indset {

// Caller handed in arguments outside an operation's contract.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (exact-oracle size, polynomial degree,
// wall-clock budget, retry budget) was exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal cross-check failed: an estimate contradicts a value the exact
// oracle proves, which indicates a bug rather than bad luck at desk scale.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace indset
