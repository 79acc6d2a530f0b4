#include "pwm/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pwm/errors.hpp"
#include "pwm/special.hpp"

namespace pwm {

namespace {

void require_two(const SortedSample& sample) {
  if (sample.size() < 2) throw InsufficientSample("plug-in EL needs at least two observations");
}

}  // namespace

double SummandVector::mean() const noexcept {
  return std::accumulate(z.begin(), z.end(), 0.0) / static_cast<double>(z.size());
}

SummandVector dnel_summands(const SortedSample& sample, PwmOrder r) {
  require_two(sample);
  const auto x = sample.values();
  const double n = static_cast<double>(x.size());
  SummandVector s{{}, Method::DNEL, r};
  s.z.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.z.push_back(std::pow(static_cast<double>(i + 1) / n, static_cast<double>(r.value())) * x[i]);
  }
  return s;
}

SummandVector vxl_summands(const SortedSample& sample, PwmOrder r) {
  require_two(sample);
  const auto x = sample.values();
  const double n = static_cast<double>(x.size());
  const double p = r.value() + 1.0;
  SummandVector s{{}, Method::VXL, r};
  s.z.reserve(x.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double cur = std::pow(static_cast<double>(i + 1) / n, p);
    s.z.push_back(n / p * x[i] * (cur - prev));
    prev = cur;
  }
  return s;
}

SummandVector plugin_summands(const SortedSample& sample, PwmOrder r, Method method) {
  switch (method) {
    case Method::DNEL: return dnel_summands(sample, r);
    case Method::VXL: return vxl_summands(sample, r);
    default: break;
  }
  throw InputError("plug-in EL is defined for DNEL and VXL only");
}

double plugin_el_neg2_ratio(const SummandVector& s, double beta0, const ELOptions& options) {
  require_spread(s.z, "summands");
  return neg2_log_ratio({s.z, beta0}, options);
}

ConfidenceInterval plugin_el_ci(const SummandVector& s, double level, const InferenceOptions& options) {
  if (!(level > 0.0 && level < 1.0)) throw InputError("confidence level must lie in (0, 1)");
  require_spread(s.z, "summands");
  const double center = s.mean();
  const double threshold = chi2_1_quantile(level);
  auto ratio = [&](double b) { return neg2_log_ratio({s.z, b}, options.el); };
  const auto [zmin, zmax] = std::minmax_element(s.z.begin(), s.z.end());
  constexpr double kMargin = 1e-12;
  const Endpoint lo = bounded_endpoint(ratio, center, shrink_toward(*zmin, center, kMargin), threshold, options.search);
  const Endpoint hi = bounded_endpoint(ratio, center, shrink_toward(*zmax, center, kMargin), threshold, options.search);

  ConfidenceInterval ci;
  ci.lower = lo.value;
  ci.upper = hi.value;
  ci.level = level;
  ci.method = s.method;
  ci.point_estimate = center;
  ci.endpoint_iterations = lo.iterations + hi.iterations;
  ci.lower_at_limit = lo.at_limit;
  ci.upper_at_limit = hi.at_limit;
  return ci;
}

ConfidenceInterval plugin_el_ci(const SortedSample& sample, PwmOrder r, double level, Method method,
                                const InferenceOptions& options) {
  return plugin_el_ci(plugin_summands(sample, r, method), level, options);
}

TestResult plugin_el_test(const SummandVector& s, double beta0, double alpha, const ELOptions& options) {
  return chi2_test_result(plugin_el_neg2_ratio(s, beta0, options), beta0, alpha);
}

TestResult plugin_el_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha, Method method,
                          const ELOptions& options) {
  return plugin_el_test(plugin_summands(sample, r, method), beta0, alpha, options);
}

}  // namespace pwm
