#include "pwm/inference_types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "pwm/errors.hpp"
#include "pwm/special.hpp"

namespace pwm {

std::string method_name(Method m) {
  switch (m) {
    case Method::JEL: return "JEL";
    case Method::AJEL: return "AJEL";
    case Method::DNEL: return "DNEL";
    case Method::VXL: return "VXL";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (s == "JEL") return Method::JEL;
  if (s == "AJEL") return Method::AJEL;
  if (s == "DNEL") return Method::DNEL;
  if (s == "VXL" || s == "VLX") return Method::VXL;
  throw InputError("unknown method '" + name + "' (expected JEL, AJEL, DNEL or VXL)");
}

TestResult chi2_test_result(double statistic, double null_value, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  TestResult t;
  t.statistic = statistic;
  t.threshold = chi2_1_quantile(1.0 - alpha);
  t.p_value = std::clamp(chi2_1_sf(std::max(0.0, statistic)), 0.0, 1.0);
  t.reject = statistic > t.threshold;
  t.null_value = null_value;
  t.alpha = alpha;
  return t;
}

}  // namespace pwm
