#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pwm {

/// Knobs for the multiplier root-finder.
struct ELOptions {
  double tolerance = 1e-10;       ///< |score| bound, relative to scale(z, mu)
  int max_iterations = 100;
  double boundary_margin = 1e-12; ///< relative shrink of the feasibility interval
};

/// One-dimensional mean-constraint EL problem: values z_1..z_m, hypothesized mean mu.
struct ELProblem {
  std::span<const double> z;
  double mu = 0.0;
};

struct ELSolution {
  double lambda = 0.0;
  std::vector<double> weights;
  double log_ratio = 0.0;  ///< -sum log(1 + lambda (z_k - mu)), always <= 0
  int iterations = 0;
  bool converged = false;
};

/// True iff min(z) < mu < max(z).
bool hull_contains(std::span<const double> z, double mu);

/// max(1, |mu|, max |z_k - mu|)
double el_scale(std::span<const double> z, double mu);

/// Solves (1/m) sum (z_k - mu) / (1 + lambda (z_k - mu)) = 0 for lambda.
///
/// Newton steps from lambda = 0, falling back to bisection whenever a step
/// leaves the current bracket. The bracket starts as the feasibility interval
/// (-1/(max z - mu), 1/(mu - min z)) shrunk by `boundary_margin`; the score is
/// strictly decreasing there so the root is unique.
///
/// Throws HullError when mu is not strictly inside the hull of z and
/// ConvergenceError (carrying the best lambda) after max_iterations.
ELSolution solve_lambda(const ELProblem& problem, const ELOptions& options = {});

/// -2 log R(mu) >= 0, or +infinity when mu is outside the hull.
double neg2_log_ratio(const ELProblem& problem, const ELOptions& options = {});

}  // namespace pwm
