#pragma once

#include <stdexcept>
#include <string>

namespace heng {

// Configuration / validation problems. Exit code 2 at the CLI.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures (exit code 3 at the CLI).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// The Liouvillian kernel is not one-dimensional; the steady state is not
// unique and is reported, never averaged.
struct DegenerateSteadyState : NumericError {
  int kernel_dimension;
  DegenerateSteadyState(int dim, const std::string& what)
      : NumericError(what), kernel_dimension(dim) {}
};

// Root bracketing failed: gain still exceeds loss at the end of the search
// interval.
struct BracketError : NumericError {
  explicit BracketError(const std::string& what) : NumericError(what) {}
};

} // namespace heng
