#pragma once

#include <stdexcept>
#include <string>

namespace cmo {

// Argument outside an operation's documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A PrimeValueSpec that cannot be materialized (bad character, wrong mode, ...).
class InvalidSpec : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A perturbation whose result leaves the open unit disc at some prime.
class InvalidPerturbation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Evaluation at a pole (zeta or a principal L-function at s = 1).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical failure: division by zero, quadrature that does not settle, ...
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The argument-principle walk could not resolve the boundary, most likely
// because a zero sits on (or extremely close to) the rectangle edge.
class BoundaryZeroError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The tail of a truncated Fourier integral is not provably below tolerance.
class TailBoundError : public NumericError {
 public:
  TailBoundError(const std::string& what, double required_T)
      : NumericError(what), required_T_(required_T) {}
  double required_T() const noexcept { return required_T_; }

 private:
  double required_T_;
};

}  // namespace cmo
