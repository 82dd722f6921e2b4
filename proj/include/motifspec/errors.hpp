#pragma once

#include <stdexcept>
#include <string>

namespace motifspec {

// Malformed input: bad indices, self-loops, length mismatches, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem precondition does not hold (disconnected host, isolated vertex,
// an eigenfunction that fails its defining equation). Callers may bypass the
// connectivity precondition with an explicit override.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace motifspec
