#include "pwm/distributions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

#include "pwm/errors.hpp"
#include "pwm/quadrature.hpp"
#include "pwm/special.hpp"

namespace pwm {

namespace {

std::string short_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// X expressed through a standardized variable t with density w(t) on [lo, hi].
struct Standardized {
  double lo;
  double hi;
  std::function<double(double)> x;
  std::function<double(double)> cdf;
  std::function<double(double)> density;
};

double std_normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); }

Standardized standardize(const DistSpec& d) {
  d.validate();
  switch (d.family) {
    case Family::Exponential: {
      const double theta = d.param1;
      return {0.0, 60.0, [theta](double t) { return theta * t; },
              [](double t) { return -std::expm1(-t); }, [](double t) { return std::exp(-t); }};
    }
    case Family::Normal: {
      const double s = d.param1;
      const double m = d.param2;
      return {-10.0, 10.0, [s, m](double t) { return m + s * t; }, normal_cdf, std_normal_pdf};
    }
    case Family::Lognormal: {
      const double s = d.param1;
      const double m = d.param2;
      // The integrand e^{s t} phi(t) peaks at t = s; keep the upper bound past it.
      return {-10.0, 10.0 + 2.0 * s, [s, m](double t) { return std::exp(m + s * t); }, normal_cdf,
              std_normal_pdf};
    }
    case Family::PointMass:
      break;
  }
  throw InputError("point mass has no density to integrate");
}

constexpr double kQuadTol = 1e-10;

}  // namespace

void DistSpec::validate() const {
  if (!std::isfinite(param1) || !std::isfinite(param2)) throw InputError("distribution parameters must be finite");
  switch (family) {
    case Family::Exponential:
      if (!(param1 > 0.0)) throw InputError("exponential mean must be positive");
      break;
    case Family::Normal:
      if (!(param1 > 0.0)) throw InputError("normal standard deviation must be positive");
      break;
    case Family::Lognormal:
      if (!(param1 > 0.0)) throw InputError("lognormal sigma must be positive");
      break;
    case Family::PointMass:
      break;
  }
}

DistSpec exponential(double mean) { return {Family::Exponential, mean, 0.0}; }
DistSpec normal(double sd, double location) { return {Family::Normal, sd, location}; }
DistSpec lognormal(double sigma, double log_location) { return {Family::Lognormal, sigma, log_location}; }
DistSpec point_mass(double value) { return {Family::PointMass, value, 0.0}; }

Family parse_family(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "exponential" || s == "exp") return Family::Exponential;
  if (s == "normal") return Family::Normal;
  if (s == "lognormal") return Family::Lognormal;
  if (s == "point" || s == "pointmass") return Family::PointMass;
  throw InputError("unknown distribution family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Exponential: return "exponential";
    case Family::Normal: return "normal";
    case Family::Lognormal: return "lognormal";
    case Family::PointMass: return "point";
  }
  return "?";
}

std::string label(const DistSpec& dist) {
  std::string s = family_name(dist.family) + ":" + short_number(dist.param1);
  if (dist.param2 != 0.0) s += ":" + short_number(dist.param2);
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SeededRng::SeededRng(std::uint64_t seed) : base_seed_(seed), engine_(splitmix64(seed)) {}

double SeededRng::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededRng::standard_normal() { return normal_quantile(uniform()); }

SeededRng SeededRng::split(std::uint64_t stream) const {
  return SeededRng(splitmix64(base_seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

std::vector<double> draw(const DistSpec& dist, std::size_t n, SeededRng& rng) {
  dist.validate();
  if (n == 0) throw InputError("sample size must be at least 1");
  std::vector<double> out(n);
  for (double& v : out) {
    switch (dist.family) {
      case Family::Exponential:
        v = -dist.param1 * std::log(rng.uniform());
        break;
      case Family::Normal:
        v = dist.param2 + dist.param1 * rng.standard_normal();
        break;
      case Family::Lognormal:
        v = std::exp(dist.param2 + dist.param1 * rng.standard_normal());
        break;
      case Family::PointMass:
        v = dist.param1;
        break;
    }
  }
  return out;
}

double true_beta(const DistSpec& dist, PwmOrder r) {
  dist.validate();
  switch (dist.family) {
    case Family::Exponential: {
      // E[max of m standard exponentials] = H_m, and beta_r = E[max of r+1] / (r+1).
      const unsigned m = r.kernel_degree();
      double h = 0.0;
      for (unsigned k = 1; k <= m; ++k) h += 1.0 / k;
      return dist.param1 * h / m;
    }
    case Family::PointMass:
      return dist.param1;
    case Family::Normal:
    case Family::Lognormal:
      return true_beta_quadrature(dist, r);
  }
  return 0.0;
}

double true_beta_quadrature(const DistSpec& dist, PwmOrder r) {
  if (dist.family == Family::PointMass) return dist.param1;
  const Standardized s = standardize(dist);
  const double rr = r.value();
  return integrate([&](double t) { return s.x(t) * std::pow(s.cdf(t), rr) * s.density(t); }, s.lo, s.hi, kQuadTol)
      .value;
}

double sigma_sq_oracle(const DistSpec& dist, PwmOrder r) {
  if (r.value() < 1) throw InputError("sigma^2 oracle requires r >= 1");
  if (dist.family == Family::PointMass) return 0.0;
  const Standardized s = standardize(dist);
  const double rr = r.value();

  auto tail = [&](double t) {
    if (t >= s.hi) return 0.0;
    return integrate([&](double u) { return s.x(u) * std::pow(s.cdf(u), rr - 1.0) * s.density(u); }, t, s.hi,
                     1e-12)
        .value;
  };
  auto psi = [&](double t) { return s.x(t) * std::pow(s.cdf(t), rr) + rr * tail(t); };

  const double m1 = integrate([&](double t) { return psi(t) * s.density(t); }, s.lo, s.hi, kQuadTol).value;
  const double m2 = integrate(
                        [&](double t) {
                          const double p = psi(t);
                          return p * p * s.density(t);
                        },
                        s.lo, s.hi, kQuadTol)
                        .value;
  return std::max(0.0, m2 - m1 * m1);
}

}  // namespace pwm
