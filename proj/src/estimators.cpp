#include "pwm/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pwm/errors.hpp"

namespace pwm {

namespace {

void require_ustat_order(PwmOrder r) {
  if (r.value() < 1) {
    throw InputError("U-statistic estimator requires r >= 1 (kernel degree >= 2)");
  }
}

// C(n, k) as a double, or +inf once it passes `cap`.
double binomial_capped(std::size_t n, std::size_t k, double cap) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    if (c > cap) return std::numeric_limits<double>::infinity();
  }
  return std::round(c);
}

}  // namespace

double PseudoValues::mean() const noexcept {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double PseudoValues::min() const noexcept { return *std::min_element(v.begin(), v.end()); }

double PseudoValues::max() const noexcept { return *std::max_element(v.begin(), v.end()); }

double dn_estimate(const SortedSample& sample, PwmOrder r) {
  const auto x = sample.values();
  const double n = static_cast<double>(x.size());
  const double rr = r.value();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += std::pow(static_cast<double>(i + 1) / n, rr) * x[i];
  }
  return sum / n;
}

double vexler_estimate(const SortedSample& sample, PwmOrder r) {
  const auto x = sample.values();
  const double n = static_cast<double>(x.size());
  const double p = r.value() + 1.0;
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double cur = std::pow(static_cast<double>(i + 1) / n, p);
    sum += x[i] * (cur - prev);
    prev = cur;
  }
  return sum / p;
}

std::vector<double> ustat_weights(std::size_t n, PwmOrder r) {
  const std::size_t rr = r.value();
  if (n < rr + 1) {
    throw InsufficientSample("U-statistic needs n >= r+1 = " + std::to_string(rr + 1) +
                             " observations, got " + std::to_string(n));
  }
  // C(i-1, r) / ((r+1) C(n, r+1)) = prod_{j<r} (i-1-j)/(n-j) / (n-r)
  std::vector<double> c(n, 0.0);
  const double tail = 1.0 / static_cast<double>(n - rr);
  for (std::size_t i = rr + 1; i <= n; ++i) {
    double w = tail;
    for (std::size_t j = 0; j < rr; ++j) {
      w *= static_cast<double>(i - 1 - j) / static_cast<double>(n - j);
    }
    c[i - 1] = w;
  }
  return c;
}

double ustat_estimate(const SortedSample& sample, PwmOrder r) {
  require_ustat_order(r);
  const auto x = sample.values();
  const auto c = ustat_weights(x.size(), r);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += c[i] * x[i];
  return sum;
}

double ustat_brute_force(const SortedSample& sample, PwmOrder r) {
  require_ustat_order(r);
  const auto x = sample.values();
  const std::size_t n = x.size();
  const std::size_t m = r.kernel_degree();
  if (n < m) {
    throw InsufficientSample("brute force needs n >= r+1 observations");
  }
  const double count = binomial_capped(n, m, kBruteForceLimit);
  if (!(count <= kBruteForceLimit)) {
    throw SizeError("C(" + std::to_string(n) + ", " + std::to_string(m) +
                    ") exceeds the brute-force enumeration limit");
  }

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  double total = 0.0;
  std::size_t subsets = 0;
  for (;;) {
    double mx = x[idx[0]];
    for (std::size_t j = 1; j < m; ++j) mx = std::max(mx, x[idx[j]]);
    total += mx;
    ++subsets;

    // Advance to the next combination in lexicographic order.
    std::size_t pos = m;
    while (pos > 0 && idx[pos - 1] == n - m + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total / static_cast<double>(subsets) / static_cast<double>(m);
}

PseudoValues jackknife_pseudo_values(const SortedSample& sample, PwmOrder r) {
  require_ustat_order(r);
  const auto x = sample.values();
  const std::size_t n = x.size();
  if (n < r.value() + 2) {
    throw InsufficientSample("jackknife needs n >= r+2 = " + std::to_string(r.value() + 2) +
                             " observations, got " + std::to_string(n));
  }

  const auto full = ustat_weights(n, r);
  const auto loo = ustat_weights(n - 1, r);

  double beta = 0.0;
  for (std::size_t i = 0; i < n; ++i) beta += full[i] * x[i];

  // Deleting sorted position k keeps the rank of t < k and lowers the rank of
  // t > k by one, so each leave-one-out estimate is a prefix plus a suffix sum.
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t t = 0; t + 1 < n; ++t) prefix[t + 1] = prefix[t] + loo[t] * x[t];
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t t = n; t-- > 1;) suffix[t] = suffix[t + 1] + loo[t - 1] * x[t];

  PseudoValues pv;
  pv.r = r;
  pv.ustat_estimate = beta;
  pv.v.resize(n);
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double deleted = prefix[k] + suffix[k + 1];
    pv.v[k] = nn * beta - (nn - 1.0) * deleted;
  }
  return pv;
}

double variance_s(const PseudoValues& pv, double beta) {
  double s = 0.0;
  for (double v : pv.v) s += (v - beta) * (v - beta);
  return s / static_cast<double>(pv.v.size());
}

}  // namespace pwm
