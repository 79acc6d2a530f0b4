#include "pwm/el_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pwm/errors.hpp"

namespace pwm {

namespace {

struct Score {
  double value;  // (1/m) sum d_k / (1 + lambda d_k)
  double slope;  // derivative in lambda, always < 0
};

Score score_at(std::span<const double> z, double mu, double lambda) {
  double g = 0.0;
  double dg = 0.0;
  for (double zk : z) {
    const double d = zk - mu;
    const double q = d / (1.0 + lambda * d);
    g += q;
    dg -= q * q;
  }
  const double m = static_cast<double>(z.size());
  return {g / m, dg / m};
}

struct Root {
  double lambda;
  int iterations;
};

Root find_lambda(std::span<const double> z, double mu, const ELOptions& opt) {
  if (z.size() < 2) throw InputError("EL problem needs at least two values");
  for (double v : z) {
    if (!std::isfinite(v)) throw InputError("EL values must be finite");
  }
  if (!std::isfinite(mu)) throw InputError("hypothesized mean must be finite");
  if (!hull_contains(z, mu)) {
    std::ostringstream os;
    os << "hypothesized mean " << mu << " lies outside the convex hull of the values";
    throw HullError(os.str());
  }

  const auto [zmin_it, zmax_it] = std::minmax_element(z.begin(), z.end());
  double lo = -1.0 / (*zmax_it - mu);
  double hi = 1.0 / (mu - *zmin_it);
  lo += std::abs(lo) * opt.boundary_margin;
  hi -= std::abs(hi) * opt.boundary_margin;
  const double tol = opt.tolerance * el_scale(z, mu);

  double lambda = 0.0;
  double best = lambda;
  double best_resid = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opt.max_iterations; ++it) {
    const Score s = score_at(z, mu, lambda);
    if (std::abs(s.value) < best_resid) {
      best_resid = std::abs(s.value);
      best = lambda;
    }
    if (std::abs(s.value) <= tol) {
      // One more Newton step is nearly free and pushes the root to round-off.
      const double polished = lambda - s.value / s.slope;
      if (polished > lo && polished < hi && std::abs(score_at(z, mu, polished).value) <= std::abs(s.value)) {
        lambda = polished;
      }
      return {lambda, it};
    }
    // Score is decreasing: positive means the root lies to the right.
    if (s.value > 0.0) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
      // Bracket is down to round-off; the score cannot be resolved further.
      return {best, it};
    }
    double next = lambda - s.value / s.slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    lambda = next;
  }
  throw ConvergenceError("multiplier equation did not converge", best, best_resid);
}

double log_ratio_at(std::span<const double> z, double mu, double lambda) {
  double l = 0.0;
  for (double zk : z) l -= std::log1p(lambda * (zk - mu));
  return l;
}

}  // namespace

bool hull_contains(std::span<const double> z, double mu) {
  if (z.empty()) return false;
  const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
  return *lo < mu && mu < *hi;
}

double el_scale(std::span<const double> z, double mu) {
  double s = std::max(1.0, std::abs(mu));
  for (double zk : z) s = std::max(s, std::abs(zk - mu));
  return s;
}

ELSolution solve_lambda(const ELProblem& problem, const ELOptions& options) {
  const Root root = find_lambda(problem.z, problem.mu, options);
  ELSolution sol;
  sol.lambda = root.lambda;
  sol.iterations = root.iterations;
  sol.converged = true;
  const double m = static_cast<double>(problem.z.size());
  sol.weights.reserve(problem.z.size());
  for (double zk : problem.z) {
    sol.weights.push_back(1.0 / (m * (1.0 + root.lambda * (zk - problem.mu))));
  }
  sol.log_ratio = std::min(0.0, log_ratio_at(problem.z, problem.mu, root.lambda));
  return sol;
}

double neg2_log_ratio(const ELProblem& problem, const ELOptions& options) {
  if (!hull_contains(problem.z, problem.mu)) {
    if (problem.z.size() >= 2 && std::isfinite(problem.mu)) {
      return std::numeric_limits<double>::infinity();
    }
  }
  const Root root = find_lambda(problem.z, problem.mu, options);
  return std::max(0.0, -2.0 * log_ratio_at(problem.z, problem.mu, root.lambda));
}

}  // namespace pwm
