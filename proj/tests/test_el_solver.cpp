#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "pwm/el_solver.hpp"
#include "pwm/errors.hpp"

using Catch::Approx;
using namespace pwm;

namespace {

// Plain bisection on the monotone score; no Newton steps.
double bisection_lambda(const std::vector<double>& z, double mu) {
  double zmin = z[0], zmax = z[0];
  for (double v : z) {
    zmin = std::min(zmin, v);
    zmax = std::max(zmax, v);
  }
  double lo = -1.0 / (zmax - mu) * (1.0 - 1e-12);
  double hi = 1.0 / (mu - zmin) * (1.0 - 1e-12);
  auto g = [&](double l) {
    double s = 0.0;
    for (double v : z) s += (v - mu) / (1.0 + l * (v - mu));
    return s;
  };
  for (int i = 0; i < 2000 && hi - lo > 1e-16; ++i) {
    const double m = 0.5 * (lo + hi);
    (g(m) > 0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

double neg2_from_lambda(const std::vector<double>& z, double mu, double l) {
  double s = 0.0;
  for (double v : z) s += std::log1p(l * (v - mu));
  return 2.0 * s;
}

const std::vector<double> kZ{1.0, 2.0, 3.0};

}  // namespace

TEST_CASE("hull membership", "[el]") {
  CHECK(hull_contains(kZ, 2.0));
  CHECK_FALSE(hull_contains(kZ, 1.0));
  CHECK_FALSE(hull_contains(kZ, 3.0));
  CHECK_FALSE(hull_contains(std::vector<double>{5, 5, 5}, 5.0));
}

TEST_CASE("solution at the sample mean is uniform", "[el]") {
  const auto sol = solve_lambda({kZ, 2.0});
  CHECK(sol.lambda == 0.0);
  CHECK(sol.log_ratio == 0.0);
  for (double w : sol.weights) CHECK(w == Approx(1.0 / 3.0));
  CHECK(neg2_log_ratio({kZ, 2.0}) == 0.0);
}

TEST_CASE("solution off the mean matches the bisection oracle", "[el]") {
  const double oracle_lambda = bisection_lambda(kZ, 2.5);
  const double oracle_stat = neg2_from_lambda(kZ, 2.5, oracle_lambda);
  // Frozen from an independent scipy bisection run.
  CHECK(oracle_lambda == Approx(-0.9536672493620403).epsilon(1e-12));
  CHECK(oracle_stat == Approx(1.2602839239449686).epsilon(1e-12));

  const auto sol = solve_lambda({kZ, 2.5});
  CHECK(sol.converged);
  CHECK(sol.lambda == Approx(oracle_lambda).epsilon(1e-10));
  CHECK(-2.0 * sol.log_ratio == Approx(oracle_stat).epsilon(1e-10));
  CHECK(neg2_log_ratio({kZ, 2.5}) == Approx(oracle_stat).epsilon(1e-10));
}

TEST_CASE("outside the hull", "[el]") {
  CHECK_THROWS_AS(solve_lambda({kZ, 3.5}), HullError);
  CHECK(neg2_log_ratio({kZ, 3.5}) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(solve_lambda({std::vector<double>{5, 5, 5}, 5.0}), HullError);
  CHECK_THROWS_AS(solve_lambda({std::vector<double>{1.0}, 1.0}), InputError);
}

TEST_CASE("iteration cap raises ConvergenceError with the best iterate", "[el]") {
  ELOptions opt;
  opt.max_iterations = 1;
  try {
    solve_lambda({kZ, 2.9}, opt);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_iterate()));
  }
}

TEST_CASE("solution invariants on random problems", "[el][property]") {
  std::mt19937_64 gen(42);
  std::lognormal_distribution<double> d(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 60)(gen);
    std::vector<double> z(m);
    for (double& v : z) v = d(gen);
    const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
    if (*lo == *hi) continue;
    const double mu = *lo + (*hi - *lo) * std::uniform_real_distribution<double>(0.01, 0.99)(gen);
    const auto sol = solve_lambda({z, mu});
    const double scale = el_scale(z, mu);

    double wsum = 0.0, moment = 0.0, score = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      REQUIRE(sol.weights[k] > 0.0);
      wsum += sol.weights[k];
      moment += sol.weights[k] * (z[k] - mu);
      score += (z[k] - mu) / (1.0 + sol.lambda * (z[k] - mu));
    }
    REQUIRE(std::abs(wsum - 1.0) <= 1e-10);
    REQUIRE(std::abs(moment) <= 1e-8 * scale);
    REQUIRE(std::abs(score / m) <= 1e-10 * scale);
    REQUIRE(sol.log_ratio <= 0.0);

    // Location-scale: (c z + d, c mu + d) gives lambda / c and the same ratio.
    const double c = std::uniform_real_distribution<double>(0.2, 20.0)(gen);
    const double shift = std::uniform_real_distribution<double>(-10.0, 10.0)(gen);
    std::vector<double> z2(z);
    for (double& v : z2) v = c * v + shift;
    const auto sol2 = solve_lambda({z2, c * mu + shift});
    REQUIRE(sol2.lambda == Approx(sol.lambda / c).epsilon(1e-8).margin(1e-12));
    REQUIRE(std::abs(sol2.log_ratio - sol.log_ratio) <= 1e-9);
  }
}

TEST_CASE("ratio is unimodal in mu with its minimum at the mean", "[el][property]") {
  const std::vector<double> z{0.3, 1.1, 1.7, 2.2, 4.0, 4.4, 6.5};
  const double mean = std::accumulate(z.begin(), z.end(), 0.0) / z.size();
  double prev = std::numeric_limits<double>::infinity();
  bool prev_right = false;
  const int steps = 400;
  for (int i = 1; i < steps; ++i) {
    const double mu = 0.3 + (6.5 - 0.3) * i / steps;
    const double v = neg2_log_ratio({z, mu});
    const bool right = mu > mean;
    REQUIRE(v >= 0.0);
    if (right && prev_right) REQUIRE(v >= prev - 1e-12);
    if (!right) REQUIRE(v <= prev + 1e-12);
    prev = v;
    prev_right = right;
  }
  CHECK(neg2_log_ratio({z, mean}) == Approx(0.0).margin(1e-20));
  CHECK(neg2_log_ratio({z, 6.5 - 1e-9}) > 50.0);
}
