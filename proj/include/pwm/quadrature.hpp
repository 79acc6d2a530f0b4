#pragma once

#include <functional>

namespace pwm {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive 7/15-point Gauss-Kronrod on a finite interval [a, b].
/// Subdivides until the Kronrod-Gauss difference on every panel is within its
/// share of `abs_tol`. Throws NumericError if `max_depth` bisections are not enough.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10, int max_depth = 50);

}  // namespace pwm
