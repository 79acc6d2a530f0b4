#pragma once

#include <functional>

namespace pwm {

struct IntervalSearchOptions {
  int max_iterations = 200;
  double residual_tolerance = 1e-9;  ///< |ratio(endpoint) - threshold|
  int max_expansions = 64;           ///< outward doublings for unbounded ratios
};

struct Endpoint {
  double value = 0.0;
  int iterations = 0;
  bool at_limit = false;
};

/// Walks from `center` (ratio 0) toward `limit` and returns the point where
/// `ratio` crosses `threshold`, by bisection. If the ratio at `limit` is still
/// below the threshold the limit itself is returned with at_limit set.
Endpoint bounded_endpoint(const std::function<double(double)>& ratio, double center, double limit,
                          double threshold, const IntervalSearchOptions& opt = {});

/// As bounded_endpoint, but the ratio is finite everywhere: the bracket is
/// found by doubling `initial_step` in `direction` (+1/-1). Returns +/-inf
/// with at_limit set if the threshold is never exceeded.
Endpoint unbounded_endpoint(const std::function<double(double)>& ratio, double center, double initial_step,
                            int direction, double threshold, const IntervalSearchOptions& opt = {});

}  // namespace pwm
