#pragma once

#include <stdexcept>

namespace trialsig {

// An iterative method (continued fraction, quadrature refinement, root
// bracketing, moment-fit solver) failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested quantity does not exist for the given inputs (e.g. a sample
// size when the observed effect cannot clear the threshold).
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trialsig
