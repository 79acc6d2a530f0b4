#pragma once

#include <stdexcept>
#include <string>

namespace pwm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something the formulas cannot accept (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Fewer observations than the estimator's kernel degree requires.
class InsufficientSample : public InputError {
 public:
  using InputError::InputError;
};

/// Brute-force enumeration refused because the subset count is too large.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

/// All constraint values coincide, so the likelihood ratio is 0/0.
class DegenerateSample : public InputError {
 public:
  using InputError::InputError;
};

/// Something went wrong while computing (CLI exit code 3).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Hypothesized mean is not strictly inside the convex hull of the data.
class HullError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Iterative solver hit its iteration cap; carries the best iterate found.
class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, double best_iterate, double residual)
      : NumericError(what), best_iterate_(best_iterate), residual_(residual) {}

  double best_iterate() const noexcept { return best_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_iterate_;
  double residual_;
};

}  // namespace pwm
