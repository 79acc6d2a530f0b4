#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pwm/el_solver.hpp"
#include "pwm/estimators.hpp"
#include "pwm/inference_types.hpp"
#include "pwm/interval_search.hpp"
#include "pwm/sample.hpp"

namespace pwm {

/// How the artificial (n+1)-th point is built.
///  Centered: g_{n+1} = -(a_n/n) sum (V_k - beta0), EL tests mean 0 on the
///            centered values. Always feasible when the V_k are not all equal.
///  Literal:  V_{n+1} = -(a_n/n) sum V_k, EL tests mean beta0 on the raw values.
enum class AdjustRule { Centered, Literal };

struct AjelOptions {
  AdjustRule rule = AdjustRule::Centered;
  std::optional<double> a_n;  ///< override; default adjustment_constant(n)
  ELOptions el;
};

struct InferenceOptions {
  ELOptions el;
  IntervalSearchOptions search;
};

/// max{1, ln(n/2)}; n >= 2.
double adjustment_constant(std::size_t n);

struct AdjustedPseudoValues {
  PseudoValues base;
  double a_n = 1.0;
  AdjustRule rule = AdjustRule::Centered;

  /// The n+1 values handed to the EL solver together with the mean they are tested against.
  std::vector<double> augmented(double beta0) const;
  double tested_mean(double beta0) const { return rule == AdjustRule::Centered ? 0.0 : beta0; }

  /// (1/(n+1)) sum_{k<=n+1} V_k. Literal: V_{n+1} = -a_n mean(V).
  /// Centered: V_{n+1} = center - a_n (mean(V) - center).
  double adjusted_jackknife_estimate(double center = 0.0) const;
};

AdjustedPseudoValues adjust(PseudoValues pv, const AjelOptions& options = {});

double jel_neg2_ratio(const PseudoValues& pv, double beta0, const ELOptions& options = {});
double jel_neg2_ratio(const SortedSample& sample, PwmOrder r, double beta0, const ELOptions& options = {});

double ajel_neg2_ratio(const PseudoValues& pv, double beta0, const AjelOptions& options = {});
double ajel_neg2_ratio(const SortedSample& sample, PwmOrder r, double beta0, const AjelOptions& options = {});

/// {beta : -2 l(beta) <= chi2_{1, level}} with endpoints inside the pseudo-value hull.
ConfidenceInterval jel_confidence_interval(const PseudoValues& pv, double level, const InferenceOptions& options = {});
ConfidenceInterval jel_confidence_interval(const SortedSample& sample, PwmOrder r, double level,
                                           const InferenceOptions& options = {});

/// {beta : -2 l_1(beta) <= chi2_{1, level}}. Endpoints may be infinite for very
/// small n, where the adjusted ratio is bounded below the threshold.
ConfidenceInterval ajel_confidence_interval(const PseudoValues& pv, double level, const AjelOptions& ajel = {},
                                            const IntervalSearchOptions& search = {});
ConfidenceInterval ajel_confidence_interval(const SortedSample& sample, PwmOrder r, double level,
                                            const AjelOptions& ajel = {}, const IntervalSearchOptions& search = {});

TestResult jel_test(const PseudoValues& pv, double beta0, double alpha, const ELOptions& options = {});
TestResult jel_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha,
                    const ELOptions& options = {});
TestResult ajel_test(const PseudoValues& pv, double beta0, double alpha, const AjelOptions& options = {});
TestResult ajel_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha,
                     const AjelOptions& options = {});

/// Moves a hull edge toward `center` by a relative `margin` (at least one ulp).
double shrink_toward(double edge, double center, double margin);

/// Throws DegenerateSample when every value in `z` is identical.
void require_spread(const std::vector<double>& z, const char* what);

}  // namespace pwm
