#pragma once

namespace pwm {

double normal_cdf(double x);

/// Inverse standard normal CDF (Wichura AS241, ~1e-16 relative).
double normal_quantile(double p);

/// P(chi2_1 <= x) = erf(sqrt(x/2)).
double chi2_1_cdf(double x);

/// 1 - chi2_1_cdf(x), computed without cancellation; 0 at +infinity.
double chi2_1_sf(double x);

/// Inverse of chi2_1_cdf on (0, 1); |cdf(quantile(p)) - p| <= 1e-10.
double chi2_1_quantile(double p);

}  // namespace pwm
