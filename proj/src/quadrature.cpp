#include "pwm/quadrature.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>

#include "pwm/errors.hpp"

namespace pwm {

namespace {

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (the 7-point rule).
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gauss;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kKronrod[7] * fc;
  double g = kGauss[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kNodes[static_cast<std::size_t>(j)];
    const double s = f(c - dx) + f(c + dx);
    k += kKronrod[static_cast<std::size_t>(j)] * s;
    if (j % 2 == 1) g += kGauss[static_cast<std::size_t>(j / 2)] * s;
  }
  return {k * h, g * h};
}

void recurse(const std::function<double(double)>& f, double a, double b, double tol, int depth,
             int max_depth, QuadratureResult& acc) {
  const Panel p = gk15(f, a, b);
  acc.evaluations += 15;
  const double err = std::abs(p.kronrod - p.gauss);
  if (!std::isfinite(p.kronrod)) throw NumericError("quadrature integrand is not finite");
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(p.kronrod);
  if (err <= std::max(tol, floor) || depth >= max_depth) {
    if (err > std::max(tol, floor)) throw NumericError("adaptive quadrature failed to reach tolerance");
    acc.value += p.kronrod;
    acc.error_estimate += err;
    return;
  }
  const double m = 0.5 * (a + b);
  recurse(f, a, m, 0.5 * tol, depth + 1, max_depth, acc);
  recurse(f, m, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth) {
  QuadratureResult acc;
  if (a == b) return acc;
  if (!(a < b)) throw InputError("integration bounds must satisfy a < b");
  recurse(f, a, b, abs_tol, 0, max_depth, acc);
  return acc;
}

}  // namespace pwm
