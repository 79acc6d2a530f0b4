#include "pwm/jel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pwm/errors.hpp"
#include "pwm/special.hpp"

namespace pwm {

namespace {

void check_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw InputError("confidence level must lie in (0, 1)");
}

}  // namespace

double shrink_toward(double edge, double center, double margin) {
  const double moved = edge - (edge - center) * margin;
  return moved == edge ? std::nextafter(edge, center) : moved;
}

namespace {

constexpr double kBoundaryMargin = 1e-12;

}  // namespace

void require_spread(const std::vector<double>& z, const char* what) {
  const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
  // Round-off in the pseudo-values of a constant sample leaves a spread of a few ulps.
  const double mag = std::max(std::abs(*lo), std::abs(*hi));
  if (*hi - *lo <= 1e-12 * mag) {
    throw DegenerateSample(std::string("degenerate sample: all ") + what + " are equal; the likelihood ratio is undefined");
  }
}

double adjustment_constant(std::size_t n) {
  if (n < 2) throw InputError("adjustment constant needs n >= 2");
  return std::max(1.0, std::log(static_cast<double>(n) / 2.0));
}

std::vector<double> AdjustedPseudoValues::augmented(double beta0) const {
  const auto& v = base.v;
  const double n = static_cast<double>(v.size());
  std::vector<double> out;
  out.reserve(v.size() + 1);
  double sum = 0.0;
  if (rule == AdjustRule::Centered) {
    for (double x : v) {
      out.push_back(x - beta0);
      sum += x - beta0;
    }
  } else {
    for (double x : v) {
      out.push_back(x);
      sum += x;
    }
  }
  out.push_back(-(a_n / n) * sum);
  return out;
}

double AdjustedPseudoValues::adjusted_jackknife_estimate(double center) const {
  const double n = static_cast<double>(base.v.size());
  const double mean = base.mean();
  const double extra = rule == AdjustRule::Literal ? -a_n * mean : center - a_n * (mean - center);
  return (n * mean + extra) / (n + 1.0);
}

AdjustedPseudoValues adjust(PseudoValues pv, const AjelOptions& options) {
  AdjustedPseudoValues out;
  out.a_n = options.a_n.value_or(adjustment_constant(pv.v.size()));
  if (!(out.a_n > 0.0) || !std::isfinite(out.a_n)) throw InputError("a_n must be positive and finite");
  out.rule = options.rule;
  out.base = std::move(pv);
  return out;
}

double jel_neg2_ratio(const PseudoValues& pv, double beta0, const ELOptions& options) {
  require_spread(pv.v, "pseudo-values");
  return neg2_log_ratio({pv.v, beta0}, options);
}

double jel_neg2_ratio(const SortedSample& sample, PwmOrder r, double beta0, const ELOptions& options) {
  return jel_neg2_ratio(jackknife_pseudo_values(sample, r), beta0, options);
}

double ajel_neg2_ratio(const PseudoValues& pv, double beta0, const AjelOptions& options) {
  require_spread(pv.v, "pseudo-values");
  const double a_n = options.a_n.value_or(adjustment_constant(pv.v.size()));
  if (!(a_n > 0.0)) throw InputError("a_n must be positive");
  const double n = static_cast<double>(pv.v.size());
  std::vector<double> z;
  z.reserve(pv.v.size() + 1);
  double sum = 0.0;
  const double shift = options.rule == AdjustRule::Centered ? beta0 : 0.0;
  for (double x : pv.v) {
    z.push_back(x - shift);
    sum += x - shift;
  }
  z.push_back(-(a_n / n) * sum);
  const double mu = options.rule == AdjustRule::Centered ? 0.0 : beta0;
  if (options.rule == AdjustRule::Centered && sum == 0.0) return 0.0;
  return neg2_log_ratio({z, mu}, options.el);
}

double ajel_neg2_ratio(const SortedSample& sample, PwmOrder r, double beta0, const AjelOptions& options) {
  return ajel_neg2_ratio(jackknife_pseudo_values(sample, r), beta0, options);
}

ConfidenceInterval jel_confidence_interval(const PseudoValues& pv, double level, const InferenceOptions& options) {
  check_level(level);
  require_spread(pv.v, "pseudo-values");
  const double center = pv.ustat_estimate;
  const double threshold = chi2_1_quantile(level);
  auto ratio = [&](double b) { return neg2_log_ratio({pv.v, b}, options.el); };

  const double lo_edge = shrink_toward(pv.min(), center, kBoundaryMargin);
  const double hi_edge = shrink_toward(pv.max(), center, kBoundaryMargin);
  const Endpoint lo = bounded_endpoint(ratio, center, lo_edge, threshold, options.search);
  const Endpoint hi = bounded_endpoint(ratio, center, hi_edge, threshold, options.search);

  ConfidenceInterval ci;
  ci.lower = lo.value;
  ci.upper = hi.value;
  ci.level = level;
  ci.method = Method::JEL;
  ci.point_estimate = center;
  ci.endpoint_iterations = lo.iterations + hi.iterations;
  ci.lower_at_limit = lo.at_limit;
  ci.upper_at_limit = hi.at_limit;
  return ci;
}

ConfidenceInterval jel_confidence_interval(const SortedSample& sample, PwmOrder r, double level,
                                           const InferenceOptions& options) {
  return jel_confidence_interval(jackknife_pseudo_values(sample, r), level, options);
}

ConfidenceInterval ajel_confidence_interval(const PseudoValues& pv, double level, const AjelOptions& ajel,
                                            const IntervalSearchOptions& search) {
  check_level(level);
  require_spread(pv.v, "pseudo-values");
  const double threshold = chi2_1_quantile(level);
  auto ratio = [&](double b) { return ajel_neg2_ratio(pv, b, ajel); };

  ConfidenceInterval ci;
  ci.level = level;
  ci.method = Method::AJEL;

  Endpoint lo;
  Endpoint hi;
  if (ajel.rule == AdjustRule::Centered) {
    const double center = pv.ustat_estimate;
    const double step = pv.max() - pv.min();
    lo = unbounded_endpoint(ratio, center, step, -1, threshold, search);
    hi = unbounded_endpoint(ratio, center, step, +1, threshold, search);
    ci.point_estimate = center;
  } else {
    // The literal rule keeps a hull; its ratio vanishes at the augmented mean.
    const AdjustedPseudoValues adj = adjust(pv, ajel);
    const auto z = adj.augmented(0.0);
    const double center = adj.adjusted_jackknife_estimate();
    const auto [zmin, zmax] = std::minmax_element(z.begin(), z.end());
    lo = bounded_endpoint(ratio, center, shrink_toward(*zmin, center, kBoundaryMargin), threshold, search);
    hi = bounded_endpoint(ratio, center, shrink_toward(*zmax, center, kBoundaryMargin), threshold, search);
    ci.point_estimate = center;
  }
  ci.lower = lo.value;
  ci.upper = hi.value;
  ci.endpoint_iterations = lo.iterations + hi.iterations;
  ci.lower_at_limit = lo.at_limit;
  ci.upper_at_limit = hi.at_limit;
  return ci;
}

ConfidenceInterval ajel_confidence_interval(const SortedSample& sample, PwmOrder r, double level,
                                            const AjelOptions& ajel, const IntervalSearchOptions& search) {
  return ajel_confidence_interval(jackknife_pseudo_values(sample, r), level, ajel, search);
}

TestResult jel_test(const PseudoValues& pv, double beta0, double alpha, const ELOptions& options) {
  return chi2_test_result(jel_neg2_ratio(pv, beta0, options), beta0, alpha);
}

TestResult jel_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha, const ELOptions& options) {
  return jel_test(jackknife_pseudo_values(sample, r), beta0, alpha, options);
}

TestResult ajel_test(const PseudoValues& pv, double beta0, double alpha, const AjelOptions& options) {
  return chi2_test_result(ajel_neg2_ratio(pv, beta0, options), beta0, alpha);
}

TestResult ajel_test(const SortedSample& sample, PwmOrder r, double beta0, double alpha,
                     const AjelOptions& options) {
  return ajel_test(jackknife_pseudo_values(sample, r), beta0, alpha, options);
}

}  // namespace pwm
