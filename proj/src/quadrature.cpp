#include "pensemble/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pensemble/errors.hpp"

namespace pensemble {

namespace {
// Pieces [2^{-m-1}, 2^{-m}] toward each end. Near 0 the last piece reaches 0.
// Near 1 the refinement stops at 1 - 2^{-48}: closer in, Kronrod nodes round to
// 1.0 itself, and the remainder is negligible for integrable endpoint behavior.
constexpr int kGeometricPieces = 48;

struct Accumulator {
  double value = 0.0;
  double l1 = 0.0;
  double error = 0.0;
};

// One GK31 panel. Boost reports the error on the reference interval [-1, 1],
// so it is rescaled here; its own adaptive driver skips that step.
void adapt(const std::function<double(double)>& f, double a, double b, double tol, unsigned depth,
           double rel, Accumulator& acc) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  double l1 = 0.0;
  const double v = gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err, &l1);
  err *= 0.5 * (b - a);
  if (depth == 0 || err <= std::max(tol, rel * l1) || !std::isfinite(v)) {
    acc.value += v;
    acc.l1 += l1;
    acc.error += err;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth - 1, rel, acc);
  adapt(f, mid, b, 0.5 * tol, depth - 1, rel, acc);
}

}  // namespace

QuadratureResult integrate_unit_interval(const std::function<double(double)>& f,
                                         const QuadratureOptions& options) {
  Accumulator acc;
  // Absolute budget shared evenly by the pieces.
  const double piece_tol = options.absolute_tolerance / (2 * kGeometricPieces);
  auto piece = [&](double a, double b) {
    adapt(f, a, b, piece_tol, options.max_depth, options.relative_tolerance, acc);
  };
  // Left half, refined toward 0.
  for (int m = 1; m < kGeometricPieces; ++m) piece(std::ldexp(1.0, -m - 1), std::ldexp(1.0, -m));
  piece(0.0, std::ldexp(1.0, -kGeometricPieces));
  // Right half, refined toward 1.
  for (int m = 1; m < kGeometricPieces; ++m) {
    piece(1.0 - std::ldexp(1.0, -m), 1.0 - std::ldexp(1.0, -m - 1));
  }
  const double total = acc.value;
  const double total_abs = acc.l1;
  const double total_err = acc.error;

  const double target = std::max(options.absolute_tolerance, options.relative_tolerance * total_abs);
  if (!std::isfinite(total) || total_err > target) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "quadrature did not converge: error estimate %.3g exceeds %.3g",
                  total_err, target);
    throw QuadratureError(msg, total_err);
  }
  return {total, total_err};
}

QuadratureResult radial_chart_integral(int d, const std::function<double(double)>& radial,
                                       const QuadratureOptions& options) {
  if (d < 1) throw DomainError("radial_chart_integral: d must be >= 1");
  // Area of the unit sphere S^{2d-1} in C^d.
  const double area = 2.0 * std::exp(d * std::log(std::numbers::pi) - std::lgamma(d));
  // t = sqrt(u/(1-u)):  t^{2d-1} dt = u^{d-1} / (2 (1-u)^{d+1}) du.
  auto integrand = [&](double u) {
    const double w = 1.0 - u;
    const double t = std::sqrt(u / w);
    return radial(t) * std::pow(u, d - 1) / (2.0 * std::pow(w, d + 1));
  };
  QuadratureResult res = integrate_unit_interval(integrand, options);
  res.value *= area;
  res.error_estimate *= area;
  return res;
}

}  // namespace pensemble
