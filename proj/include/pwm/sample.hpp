#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pwm {

/// Order statistics X_(1) <= ... <= X_(n) of a finite, non-empty sample.
class SortedSample {
 public:
  /// Sorts (stably) and validates. Throws InputError on empty or non-finite input.
  static SortedSample from_unsorted(std::vector<double> values);

  /// Accepts already-sorted data; throws InputError if the order is violated.
  static SortedSample from_sorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  /// Sorted sample with the observation at sorted position `index` removed.
  SortedSample without(std::size_t index) const;

  /// c * X for c > 0; order is preserved.
  SortedSample scaled(double c) const;

 private:
  explicit SortedSample(std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// The order r of beta_r = E[X F^r(X)]; non-negative integer.
class PwmOrder {
 public:
  /// Throws InputError for negative r.
  explicit PwmOrder(int r);

  unsigned value() const noexcept { return r_; }
  unsigned kernel_degree() const noexcept { return r_ + 1; }

  friend bool operator==(PwmOrder, PwmOrder) = default;

 private:
  unsigned r_;
};

}  // namespace pwm
