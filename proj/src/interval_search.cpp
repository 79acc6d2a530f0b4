#include "pwm/interval_search.hpp"

#include <cmath>
#include <limits>

#include "pwm/errors.hpp"

namespace pwm {

namespace {

// inside: ratio < threshold; outside: ratio >= threshold.
Endpoint bisect(const std::function<double(double)>& ratio, double inside, double outside, double threshold,
                int used, const IntervalSearchOptions& opt) {
  double best = inside;
  double best_resid = threshold;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) return {best, used + it, false};
    const double f = ratio(mid);
    const double resid = std::abs(f - threshold);
    if (resid < best_resid) {
      best_resid = resid;
      best = mid;
    }
    if (resid <= opt.residual_tolerance) return {mid, used + it, false};
    if (f < threshold) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  throw ConvergenceError("confidence interval endpoint search did not converge", best, best_resid);
}

}  // namespace

Endpoint bounded_endpoint(const std::function<double(double)>& ratio, double center, double limit,
                          double threshold, const IntervalSearchOptions& opt) {
  const double at_limit = ratio(limit);
  if (at_limit < threshold) return {limit, 1, true};
  return bisect(ratio, center, limit, threshold, 1, opt);
}

Endpoint unbounded_endpoint(const std::function<double(double)>& ratio, double center, double initial_step,
                            int direction, double threshold, const IntervalSearchOptions& opt) {
  if (!(initial_step > 0.0)) throw InputError("initial step must be positive");
  const double dir = direction >= 0 ? 1.0 : -1.0;
  double inside = center;
  double step = initial_step;
  for (int k = 1; k <= opt.max_expansions; ++k) {
    const double probe = center + dir * step;
    if (ratio(probe) >= threshold) return bisect(ratio, inside, probe, threshold, k, opt);
    inside = probe;
    step *= 2.0;
  }
  return {dir * std::numeric_limits<double>::infinity(), opt.max_expansions, true};
}

}  // namespace pwm
