#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "pwm/distributions.hpp"
#include "pwm/errors.hpp"
#include "pwm/estimators.hpp"
#include "pwm/jel.hpp"
#include "pwm/special.hpp"

using Catch::Approx;
using namespace pwm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const SortedSample kOneToFour = SortedSample::from_unsorted({1, 2, 3, 4});

SortedSample random_sample(int family, std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  const DistSpec d = family == 0 ? exponential(1.0) : family == 1 ? normal(1.0) : lognormal(1.0);
  return SortedSample::from_unsorted(draw(d, n, rng));
}

}  // namespace

TEST_CASE("adjustment constant", "[jel]") {
  CHECK(adjustment_constant(2) == 1.0);
  CHECK(adjustment_constant(5) == 1.0);
  CHECK(adjustment_constant(20) == Approx(2.302585092994046).epsilon(1e-14));
  CHECK_THROWS_AS(adjustment_constant(1), InputError);
}

TEST_CASE("JEL ratio examples", "[jel]") {
  const PwmOrder r1(1);
  CHECK(jel_neg2_ratio(kOneToFour, r1, ustat_estimate(kOneToFour, r1)) == Approx(0.0).margin(1e-20));
  // Golden value from an independent scipy bisection on V = [7/6, 7/6, 5/3, 8/3].
  CHECK(jel_neg2_ratio(kOneToFour, r1, 2.0) == Approx(1.0027398902042737).epsilon(1e-10));
  CHECK(jel_neg2_ratio(kOneToFour, r1, 3.0) == kInf);
  CHECK_THROWS_AS(jel_neg2_ratio(SortedSample::from_unsorted({2, 2, 2, 2}), r1, 1.0), DegenerateSample);
  CHECK_THROWS_AS(jel_neg2_ratio(SortedSample::from_unsorted({1, 2}), r1, 1.0), InsufficientSample);
}

TEST_CASE("AJEL ratio examples", "[jel]") {
  const PwmOrder r1(1);
  CHECK(ajel_neg2_ratio(kOneToFour, r1, 5.0 / 3.0) == Approx(0.0).margin(1e-20));
  const double at3 = ajel_neg2_ratio(kOneToFour, r1, 3.0);
  CHECK(std::isfinite(at3));
  CHECK(at3 > 0.0);
  CHECK_THROWS_AS(ajel_neg2_ratio(SortedSample::from_unsorted({2, 2, 2, 2}), r1, 1.0), DegenerateSample);

  AjelOptions lit;
  lit.rule = AdjustRule::Literal;
  CHECK(std::isfinite(ajel_neg2_ratio(kOneToFour, r1, 1.5, lit)));
  CHECK(ajel_neg2_ratio(kOneToFour, r1, 3.0, lit) == kInf);

  AjelOptions custom;
  custom.a_n = 3.0;
  const auto adj = adjust(jackknife_pseudo_values(kOneToFour, r1), custom);
  CHECK(adj.a_n == 3.0);
  const auto aug = adj.augmented(2.0);
  REQUIRE(aug.size() == 5);
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += aug[k];
  CHECK(aug[4] == Approx(-3.0 / 4.0 * sum).epsilon(1e-14));

  AjelOptions bad;
  bad.a_n = -1.0;
  CHECK_THROWS_AS(adjust(jackknife_pseudo_values(kOneToFour, r1), bad), InputError);
}

TEST_CASE("adjusted jackknife estimates", "[jel]") {
  const auto pv = jackknife_pseudo_values(kOneToFour, PwmOrder(1));
  AjelOptions lit;
  lit.rule = AdjustRule::Literal;
  const auto l = adjust(pv, lit);
  CHECK(l.adjusted_jackknife_estimate() == Approx((4.0 - l.a_n) * pv.mean() / 5.0).epsilon(1e-14));
  const auto c = adjust(pv);
  CHECK(c.adjusted_jackknife_estimate(pv.mean()) == Approx(pv.mean()).epsilon(1e-14));
}

TEST_CASE("ratio grows away from the estimate and dominance holds", "[jel][property]") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_sample(trial % 3, 15 + trial % 40, 1000 + trial);
    const PwmOrder r(1 + trial % 4);
    const auto pv = jackknife_pseudo_values(s, r);
    const double est = pv.ustat_estimate;
    const double span = pv.max() - pv.min();
    double prev_up = 0.0, prev_dn = 0.0;
    for (int i = 1; i <= 30; ++i) {
      const double step = span * i / 30.0;
      const double up = jel_neg2_ratio(pv, est + step);
      const double dn = jel_neg2_ratio(pv, est - step);
      REQUIRE(up >= prev_up);
      REQUIRE(dn >= prev_dn);
      REQUIRE(ajel_neg2_ratio(pv, est + step) <= up * (1.0 + 1e-12) + 1e-12);
      REQUIRE(ajel_neg2_ratio(pv, est - step) <= dn * (1.0 + 1e-12) + 1e-12);
      prev_up = up;
      prev_dn = dn;
    }
    REQUIRE(jel_neg2_ratio(pv, pv.max() + 1.0) == kInf);
  }
}

TEST_CASE("confidence intervals", "[jel]") {
  const auto s = random_sample(0, 60, 4);
  const PwmOrder r(1);
  const auto pv = jackknife_pseudo_values(s, r);
  const double thr = chi2_1_quantile(0.95);
  const auto ci = jel_confidence_interval(pv, 0.95);
  CHECK(ci.method == Method::JEL);
  CHECK(ci.lower < ci.point_estimate);
  CHECK(ci.point_estimate < ci.upper);
  CHECK(ci.lower > pv.min());
  CHECK(ci.upper < pv.max());
  CHECK(std::abs(jel_neg2_ratio(pv, ci.lower) - thr) <= 1e-6);
  CHECK(std::abs(jel_neg2_ratio(pv, ci.upper) - thr) <= 1e-6);

  const auto ci2 = ajel_confidence_interval(pv, 0.95);
  CHECK(ci2.method == Method::AJEL);
  CHECK(std::abs(ajel_neg2_ratio(pv, ci2.lower) - thr) <= 1e-6);
  CHECK(std::abs(ajel_neg2_ratio(pv, ci2.upper) - thr) <= 1e-6);
  CHECK(ci2.lower <= ci.lower);
  CHECK(ci2.upper >= ci.upper);

  const auto wide = jel_confidence_interval(pv, 0.99);
  CHECK(wide.length() > ci.length());

  CHECK_THROWS_AS(jel_confidence_interval(pv, 1.5), InputError);
  CHECK_THROWS_AS(jel_confidence_interval(SortedSample::from_unsorted({3, 3, 3, 3}), r, 0.95), DegenerateSample);
}

TEST_CASE("AJEL interval is unbounded for tiny samples", "[jel]") {
  const auto ci = ajel_confidence_interval(kOneToFour, PwmOrder(1), 0.95);
  CHECK(ci.lower == -kInf);
  CHECK(ci.upper == kInf);
  CHECK(ci.lower_at_limit);
  CHECK(ci.upper_at_limit);
}

TEST_CASE("interval containment on random samples", "[jel][property]") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_sample(trial % 3, 20 + 3 * (trial % 30), 7000 + trial);
    const PwmOrder r(1 + trial % 4);
    const auto c1 = jel_confidence_interval(s, r, 0.95);
    const auto c2 = ajel_confidence_interval(s, r, 0.95);
    REQUIRE(c2.lower <= c1.lower + 1e-9 * std::abs(c1.lower));
    REQUIRE(c2.upper >= c1.upper - 1e-9 * std::abs(c1.upper));
  }
}

TEST_CASE("test and interval duality", "[jel][property]") {
  const auto s = random_sample(2, 80, 12);
  const PwmOrder r(2);
  const auto pv = jackknife_pseudo_values(s, r);
  const auto ci = jel_confidence_interval(pv, 0.95);
  const auto ci2 = ajel_confidence_interval(pv, 0.95);
  const double lo = pv.min(), hi = pv.max();
  for (int i = 1; i < 400; ++i) {
    const double b = lo + (hi - lo) * i / 400.0;
    // Skip grid points within the endpoint search tolerance.
    if (std::abs(b - ci.lower) < 1e-6 || std::abs(b - ci.upper) < 1e-6) continue;
    if (std::abs(b - ci2.lower) < 1e-6 || std::abs(b - ci2.upper) < 1e-6) continue;
    REQUIRE(ci.contains(b) == !jel_test(pv, b, 0.05).reject);
    REQUIRE(ci2.contains(b) == !ajel_test(pv, b, 0.05).reject);
  }
}

TEST_CASE("tests", "[jel]") {
  const auto pv = jackknife_pseudo_values(kOneToFour, PwmOrder(1));
  const auto at_est = jel_test(pv, pv.ustat_estimate, 0.05);
  CHECK(at_est.statistic == Approx(0.0).margin(1e-20));
  CHECK_FALSE(at_est.reject);
  CHECK(at_est.p_value == Approx(1.0));

  const auto out = jel_test(pv, 3.0, 0.05);
  CHECK(out.statistic == kInf);
  CHECK(out.reject);
  CHECK(out.p_value == 0.0);

  const auto mid = jel_test(pv, 2.0, 0.05);
  CHECK(mid.threshold == Approx(3.841458820694124).epsilon(1e-12));
  CHECK(mid.reject == (mid.statistic > mid.threshold));
  CHECK(mid.p_value == Approx(chi2_1_sf(mid.statistic)).epsilon(1e-14));
  CHECK_THROWS_AS(jel_test(pv, 2.0, 0.0), InputError);

  const auto adj = ajel_test(pv, 3.0, 0.05);
  CHECK(std::isfinite(adj.statistic));
}

TEST_CASE("intervals are scale equivariant", "[jel][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_sample(trial % 3, 40, 300 + trial);
    const double c = 0.5 + trial;
    const PwmOrder r(1 + trial % 3);
    const auto a = jel_confidence_interval(s, r, 0.95);
    const auto b = jel_confidence_interval(s.scaled(c), r, 0.95);
    REQUIRE(b.lower == Approx(c * a.lower).epsilon(1e-7));
    REQUIRE(b.upper == Approx(c * a.upper).epsilon(1e-7));
    const auto a2 = ajel_confidence_interval(s, r, 0.95);
    const auto b2 = ajel_confidence_interval(s.scaled(c), r, 0.95);
    REQUIRE(b2.lower == Approx(c * a2.lower).epsilon(1e-7));
    REQUIRE(b2.upper == Approx(c * a2.upper).epsilon(1e-7));
  }
}

TEST_CASE("literal-rule interval", "[jel]") {
  const auto s = random_sample(0, 100, 55);
  AjelOptions lit;
  lit.rule = AdjustRule::Literal;
  const auto ci = ajel_confidence_interval(s, PwmOrder(1), 0.95, lit);
  CHECK(ci.lower < ci.point_estimate);
  CHECK(ci.point_estimate < ci.upper);
  CHECK(ci.contains(ci.point_estimate));
}

TEST_CASE("statistic is approximately chi-square(1) under the null", "[jel][calibration]") {
  const std::size_t reps = 600;
  double sum = 0.0;
  for (std::size_t i = 0; i < reps; ++i) {
    const auto s = random_sample(0, 150, 900000 + i);
    sum += jel_neg2_ratio(s, PwmOrder(1), 0.75);
  }
  CHECK(sum / reps == Approx(1.0).margin(0.2));
}
