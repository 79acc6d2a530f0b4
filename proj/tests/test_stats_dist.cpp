#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "pwm/distributions.hpp"
#include "pwm/errors.hpp"
#include "pwm/estimators.hpp"
#include "pwm/quadrature.hpp"
#include "pwm/special.hpp"

using Catch::Approx;
using namespace pwm;

TEST_CASE("chi-square(1) distribution functions", "[special]") {
  CHECK(chi2_1_cdf(0.0) == 0.0);
  CHECK(chi2_1_sf(0.0) == 1.0);
  CHECK(chi2_1_sf(INFINITY) == 0.0);
  // Independent frozen value: scipy.stats.chi2(1).ppf(0.95).
  CHECK(chi2_1_quantile(0.95) == Approx(3.841458820694124).epsilon(1e-12));
  const double z = normal_quantile(0.975);
  CHECK(chi2_1_quantile(0.95) == Approx(z * z).epsilon(1e-12));
  for (double x : {0.1, 1.0, 5.0, 10.0}) {
    CHECK(std::abs(chi2_1_quantile(chi2_1_cdf(x)) - x) <= 1e-8);
  }
  for (double p : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.99, 0.999999}) {
    CHECK(std::abs(chi2_1_cdf(chi2_1_quantile(p)) - p) <= 1e-10);
  }
  CHECK_THROWS_AS(chi2_1_cdf(-1.0), InputError);
  CHECK_THROWS_AS(chi2_1_quantile(0.0), InputError);
  CHECK_THROWS_AS(chi2_1_quantile(1.0), InputError);
}

TEST_CASE("normal primitives", "[special]") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_quantile(0.5) == Approx(0.0).margin(1e-15));
  CHECK(normal_quantile(0.975) == Approx(1.959963984540054).epsilon(1e-13));
  CHECK(normal_quantile(1e-10) == Approx(-6.361340902404056).epsilon(1e-10));
}

TEST_CASE("quadrature", "[quadrature]") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value == Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 60.0).value == Approx(1.0).epsilon(1e-11));
  const double gauss = integrate([](double x) { return std::exp(-0.5 * x * x); }, -10.0, 10.0).value;
  CHECK(gauss == Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-11));
}

TEST_CASE("distribution parameters are validated", "[dist]") {
  CHECK_THROWS_AS(exponential(0.0).validate(), InputError);
  CHECK_THROWS_AS(normal(-1.0).validate(), InputError);
  CHECK_THROWS_AS(lognormal(0.0).validate(), InputError);
  CHECK_THROWS_AS(parse_family("gamma"), InputError);
  CHECK(parse_family("exp") == Family::Exponential);
  CHECK(label(exponential(1.0)).find(',') == std::string::npos);
  SeededRng rng(1);
  CHECK_THROWS_AS(draw(exponential(-2.0), 3, rng), InputError);
  CHECK_THROWS_AS(draw(exponential(1.0), 0, rng), InputError);
}

TEST_CASE("sampling is deterministic and distributionally correct", "[dist]") {
  SeededRng a(99), b(99), c(100);
  const auto x = draw(normal(1.0), 50, a);
  const auto y = draw(normal(1.0), 50, b);
  const auto z = draw(normal(1.0), 50, c);
  CHECK(x == y);
  CHECK(x != z);

  SeededRng e(2024);
  const auto ex = draw(exponential(1.0), 100000, e);
  CHECK(std::accumulate(ex.begin(), ex.end(), 0.0) / ex.size() == Approx(1.0).margin(0.02));

  SeededRng l(7);
  auto ln = draw(lognormal(1.0), 100000, l);
  std::nth_element(ln.begin(), ln.begin() + ln.size() / 2, ln.end());
  CHECK(ln[ln.size() / 2] == Approx(1.0).margin(0.03));

  SeededRng nrm(8);
  const auto nx = draw(normal(2.0, 5.0), 100000, nrm);
  const double mean = std::accumulate(nx.begin(), nx.end(), 0.0) / nx.size();
  double ss = 0.0;
  for (double v : nx) ss += (v - mean) * (v - mean);
  CHECK(mean == Approx(5.0).margin(0.04));
  CHECK(std::sqrt(ss / (nx.size() - 1)) == Approx(2.0).margin(0.03));

  SeededRng pm(3);
  for (double v : draw(point_mass(4.5), 10, pm)) CHECK(v == 4.5);

  for (int i = 0; i < 100000; ++i) {
    const double u = e.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("split streams are distinct and reproducible", "[dist]") {
  SeededRng base(5);
  auto s1 = base.split(1), s1b = base.split(1), s2 = base.split(2);
  const auto a = s1.next_u64();
  CHECK(a == s1b.next_u64());
  CHECK(a != s2.next_u64());
}

TEST_CASE("true beta values", "[dist]") {
  CHECK(true_beta(exponential(1.0), PwmOrder(1)) == Approx(0.75).epsilon(1e-15));
  CHECK(true_beta(exponential(0.9), PwmOrder(1)) == Approx(0.675).epsilon(1e-14));
  CHECK(true_beta(normal(2.0), PwmOrder(1)) == Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-9));
  // Closed form for the lognormal with r = 1: e^{s^2/2} Phi(s/sqrt 2).
  CHECK(true_beta(lognormal(1.5), PwmOrder(1)) == Approx(2.6353652069502838).epsilon(1e-9));
  // r = 0 is the mean.
  CHECK(true_beta(lognormal(1.0), PwmOrder(0)) == Approx(std::exp(0.5)).epsilon(1e-9));
  CHECK(true_beta(normal(1.0, 3.0), PwmOrder(0)) == Approx(3.0).epsilon(1e-9));
  // F = 1 at the atom, so beta_r is the atom itself.
  CHECK(true_beta(point_mass(2.0), PwmOrder(3)) == 2.0);
}

TEST_CASE("true beta properties", "[dist][property]") {
  for (int r = 0; r <= 4; ++r) {
    const double e1 = true_beta(exponential(1.0), PwmOrder(r));
    CHECK(true_beta_quadrature(exponential(1.0), PwmOrder(r)) == Approx(e1).margin(1e-8));
    CHECK(true_beta(exponential(2.5), PwmOrder(r)) == Approx(2.5 * e1).epsilon(1e-14));
    if (r > 0) {
      CHECK(e1 < true_beta(exponential(1.0), PwmOrder(r - 1)));
      CHECK(true_beta(lognormal(1.0), PwmOrder(r)) < true_beta(lognormal(1.0), PwmOrder(r - 1)));
    }
  }
}

TEST_CASE("sigma squared oracle", "[dist]") {
  // psi(x) = x + e^{-x} for Exp(1), r = 1: Var = 7/12.
  CHECK(sigma_sq_oracle(exponential(1.0), PwmOrder(1)) == Approx(7.0 / 12.0).epsilon(1e-7));
  CHECK(sigma_sq_oracle(exponential(3.0), PwmOrder(1)) == Approx(9.0 * 7.0 / 12.0).epsilon(1e-7));
  for (int r = 1; r <= 4; ++r) {
    CHECK(sigma_sq_oracle(normal(1.0), PwmOrder(r)) > 0.0);
    CHECK(sigma_sq_oracle(lognormal(1.0), PwmOrder(r)) > 0.0);
  }
  CHECK_THROWS_AS(sigma_sq_oracle(exponential(1.0), PwmOrder(0)), InputError);
}

TEST_CASE("S approaches the oracle variance", "[dist][calibration]") {
  const double sigma2 = sigma_sq_oracle(exponential(1.0), PwmOrder(1));
  SeededRng rng(2000);
  const auto s = SortedSample::from_unsorted(draw(exponential(1.0), 2000, rng));
  const double S = variance_s(jackknife_pseudo_values(s, PwmOrder(1)), 0.75);
  CHECK(std::abs(S - sigma2) <= 0.1 * sigma2);
}

TEST_CASE("standardized estimator has unit variance", "[dist][calibration]") {
  const double sigma = std::sqrt(sigma_sq_oracle(exponential(1.0), PwmOrder(1)));
  const std::size_t n = 500, reps = 2000;
  std::vector<double> t(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    SeededRng rng(SeededRng(31337).split(i));
    const auto s = SortedSample::from_unsorted(draw(exponential(1.0), n, rng));
    t[i] = std::sqrt(static_cast<double>(n)) * (ustat_estimate(s, PwmOrder(1)) - 0.75) / sigma;
  }
  const double mean = std::accumulate(t.begin(), t.end(), 0.0) / reps;
  double ss = 0.0;
  for (double v : t) ss += (v - mean) * (v - mean);
  CHECK(ss / (reps - 1) == Approx(1.0).margin(0.1));
}
