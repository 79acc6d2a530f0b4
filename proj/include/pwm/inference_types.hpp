#pragma once

#include <string>

namespace pwm {

enum class Method { JEL, AJEL, DNEL, VXL };

std::string method_name(Method m);
/// Case-insensitive; accepts "jel", "ajel", "dnel", "vxl" (also "vlx"). Throws InputError.
Method parse_method(const std::string& name);

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  Method method = Method::JEL;
  double point_estimate = 0.0;
  int endpoint_iterations = 0;
  bool lower_at_limit = false;  ///< ratio never reached the threshold before the hull edge (or -inf)
  bool upper_at_limit = false;

  double length() const noexcept { return upper - lower; }
  bool contains(double beta) const noexcept { return lower <= beta && beta <= upper; }
};

struct TestResult {
  double statistic = 0.0;  ///< -2 log R(beta0); +inf when beta0 is infeasible
  double threshold = 0.0;  ///< chi2_1 quantile at 1 - alpha
  double p_value = 1.0;
  bool reject = false;
  double null_value = 0.0;
  double alpha = 0.05;
};

/// Builds a TestResult from a statistic: reject iff statistic > threshold,
/// p-value from the chi2_1 survival function (0 for +inf).
TestResult chi2_test_result(double statistic, double null_value, double alpha);

}  // namespace pwm
