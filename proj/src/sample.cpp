#include "pwm/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwm/errors.hpp"

namespace pwm {

namespace {

void check_finite_nonempty(const std::vector<double>& values) {
  if (values.empty()) throw InputError("sample is empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("sample contains a non-finite value");
  }
}

}  // namespace

SortedSample SortedSample::from_unsorted(std::vector<double> values) {
  check_finite_nonempty(values);
  std::stable_sort(values.begin(), values.end());
  return SortedSample(std::move(values));
}

SortedSample SortedSample::from_sorted(std::vector<double> values) {
  check_finite_nonempty(values);
  if (!std::is_sorted(values.begin(), values.end())) {
    throw InputError("sample is not sorted ascending");
  }
  return SortedSample(std::move(values));
}

SortedSample SortedSample::without(std::size_t index) const {
  if (index >= values_.size()) throw InputError("deletion index out of range");
  if (values_.size() == 1) throw InsufficientSample("cannot delete the only observation");
  std::vector<double> rest;
  rest.reserve(values_.size() - 1);
  rest.insert(rest.end(), values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(index));
  rest.insert(rest.end(), values_.begin() + static_cast<std::ptrdiff_t>(index) + 1, values_.end());
  return SortedSample(std::move(rest));
}

SortedSample SortedSample::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError("scale factor must be positive and finite");
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return SortedSample(std::move(out));
}

PwmOrder::PwmOrder(int r) {
  if (r < 0) throw InputError("PWM order r must be non-negative, got " + std::to_string(r));
  r_ = static_cast<unsigned>(r);
}

}  // namespace pwm
