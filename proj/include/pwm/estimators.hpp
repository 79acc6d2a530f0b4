#pragma once

#include <cstddef>
#include <vector>

#include "pwm/sample.hpp"

namespace pwm {

/// Leave-one-out pseudo-values of the U-statistic estimator, in sorted order.
struct PseudoValues {
  std::vector<double> v;
  double ustat_estimate = 0.0;  ///< beta-hat on the full sample; equals mean(v).
  PwmOrder r{1};

  std::size_t n() const noexcept { return v.size(); }
  double mean() const noexcept;
  double min() const noexcept;
  double max() const noexcept;
};

/// Plug-in estimator (1/n) sum (i/n)^r X_(i).
double dn_estimate(const SortedSample& sample, PwmOrder r);

/// (1/(r+1)) sum X_(i) [(i/n)^(r+1) - ((i-1)/n)^(r+1)].
double vexler_estimate(const SortedSample& sample, PwmOrder r);

/// Unbiased estimator: the average subset maximum over all (r+1)-subsets,
/// divided by r+1, evaluated in O(n r) through order-statistic weights.
/// Requires r >= 1 and n >= r+1.
double ustat_estimate(const SortedSample& sample, PwmOrder r);

/// Same quantity by explicit enumeration of every (r+1)-subset.
/// Refuses (SizeError) when C(n, r+1) exceeds kBruteForceLimit.
double ustat_brute_force(const SortedSample& sample, PwmOrder r);

inline constexpr double kBruteForceLimit = 1e6;

/// Weights c_i with ustat_estimate = sum_i c_i X_(i); c_i = C(i-1,r) / ((r+1) C(n,r+1)).
/// Built from ratio products, so n up to 1e5 and beyond stays finite.
std::vector<double> ustat_weights(std::size_t n, PwmOrder r);

/// V_k = n beta-hat - (n-1) beta-hat_(-k). Requires n >= r+2.
PseudoValues jackknife_pseudo_values(const SortedSample& sample, PwmOrder r);

/// (1/n) sum (V_k - beta)^2.
double variance_s(const PseudoValues& pv, double beta);

}  // namespace pwm
