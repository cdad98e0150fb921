#pragma once

#include <stdexcept>
#include <string>

namespace minlen {

// Argument outside the domain of an operation (invalid quantum numbers,
// eta outside [1/3, 1], negative lengths, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An expectation value or operator that diverges for the requested state,
// e.g. <r^-3> for s-states.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a coordinate singularity (r = 0 or sin(theta) = 0).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A derived parameter that is not defined for the given input,
// e.g. eta for beta + beta' = 0.
class UndefinedParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Non-finite integrand or failed quadrature; carries the last error estimate.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double estimate = 0.0)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

// Quadrature refinement levels disagree beyond tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minlen
