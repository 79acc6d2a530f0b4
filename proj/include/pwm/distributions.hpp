#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pwm/sample.hpp"

namespace pwm {

enum class Family { Exponential, Normal, Lognormal, PointMass };

/// Parameter conventions:
///   Exponential: param1 = mean theta
///   Normal:      param1 = standard deviation, param2 = location
///   Lognormal:   param1 = sigma of log X,     param2 = mu of log X
///   PointMass:   param1 = the atom (degenerate test distribution)
struct DistSpec {
  Family family = Family::Exponential;
  double param1 = 1.0;
  double param2 = 0.0;

  /// Throws InputError for non-positive scale parameters.
  void validate() const;

  friend bool operator==(const DistSpec&, const DistSpec&) = default;
};

DistSpec exponential(double mean);
DistSpec normal(double sd, double location = 0.0);
DistSpec lognormal(double sigma, double log_location = 0.0);
DistSpec point_mass(double value);

/// "exponential", "exp", "normal", "lognormal", "point". Throws InputError otherwise.
Family parse_family(const std::string& name);
std::string family_name(Family family);

/// Compact label such as "exponential:1" or "normal:2"; no commas, CSV-safe.
std::string label(const DistSpec& dist);

/// splitmix64 finaliser: bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic generator: mt19937_64 with a seed from splitmix64. Uniforms
/// and normals are produced by our own transforms so streams are identical on
/// every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t base_seed() const noexcept { return base_seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Standard normal by inverse CDF.
  double standard_normal();

  /// Independent child stream keyed by `stream`.
  SeededRng split(std::uint64_t stream) const;

 private:
  std::uint64_t base_seed_;
  std::mt19937_64 engine_;
};

std::vector<double> draw(const DistSpec& dist, std::size_t n, SeededRng& rng);

/// beta_r for the family: harmonic closed form for the exponential, adaptive
/// quadrature over the standard-normal variable for normal and lognormal.
double true_beta(const DistSpec& dist, PwmOrder r);

/// beta_r by quadrature for every family (cross-check of the closed form).
double true_beta_quadrature(const DistSpec& dist, PwmOrder r);

/// Var(X F^r(X) + r int_X^inf y F^(r-1)(y) dF(y)) by nested quadrature;
/// the asymptotic variance of sqrt(n)(beta-hat - beta). Requires r >= 1.
double sigma_sq_oracle(const DistSpec& dist, PwmOrder r);

}  // namespace pwm
