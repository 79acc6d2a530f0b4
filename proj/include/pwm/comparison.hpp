#pragma once

// Plug-in empirical likelihood on order-statistic summands whose mean is the
// D-N estimator (DNEL) or the Vexler estimator (VXL). The construction only
// guarantees the point estimate; its calibration is checked against
// simulation rather than derived.

#include <vector>

#include "pwm/el_solver.hpp"
#include "pwm/inference_types.hpp"
#include "pwm/jel.hpp"
#include "pwm/sample.hpp"

namespace pwm {

struct SummandVector {
  std::vector<double> z;
  Method method = Method::DNEL;
  PwmOrder r{1};

  double mean() const noexcept;
};

/// z_i = (i/n)^r X_(i); mean(z) = dn_estimate.
SummandVector dnel_summands(const SortedSample& sample, PwmOrder r);

/// z_i = (n/(r+1)) X_(i) [(i/n)^(r+1) - ((i-1)/n)^(r+1)]; mean(z) = vexler_estimate.
SummandVector vxl_summands(const SortedSample& sample, PwmOrder r);

/// Dispatches on method (DNEL or VXL only).
SummandVector plugin_summands(const SortedSample& sample, PwmOrder r, Method method);

double plugin_el_neg2_ratio(const SummandVector& s, double beta0, const ELOptions& options = {});

ConfidenceInterval plugin_el_ci(const SummandVector& s, double level, const InferenceOptions& options = {});
ConfidenceInterval plugin_el_ci(const SortedSample& sample, PwmOrder r, double level, Method method,
                                const InferenceOptions& options = {});

TestResult plugin_el_test(const SummandVector& s, double beta0, double alpha, const ELOptions& options = {});
TestResult plugin_el_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha, Method method,
                          const ELOptions& options = {});

}  // namespace pwm
