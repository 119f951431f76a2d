#pragma once

#include <stdexcept>
#include <string>

namespace mdgas {

// Bad input: invalid coupling, degenerate momenta, out-of-guard sizes.
// The CLI maps this to exit code 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Momenta or coordinates that make a formula degenerate (repeated momenta,
// points on a sector boundary).
class DegenerateInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Iterative solver failed to reach the requested residual. Exit code 2.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mdgas
