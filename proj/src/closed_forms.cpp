#include "pensemble/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pensemble/errors.hpp"
#include "pensemble/kernel.hpp"
#include "pensemble/projective_geometry.hpp"
#include "pensemble/special_functions.hpp"

namespace pensemble {

namespace {

void require_riesz_range(int d, double s, const char* who) {
  if (!(s > 0.0 && s < 2.0 * d)) {
    throw DomainError(std::string(who) + ": s must lie in (0, 2d) = (0, " +
                      std::to_string(2 * d) + ")");
  }
}

void require_degree(int d, int L, const char* who) {
  if (d < 1) throw DomainError(std::string(who) + ": d must be >= 1");
  if (L < 1) throw DomainError(std::string(who) + ": L must be >= 1");
}

double rank(int d, int L) { return static_cast<double>(KernelParams(d, L).r()); }

// log d!
double log_factorial(int d) { return std::lgamma(d + 1.0); }

}  // namespace

double ExpectedEnergy::asymptotic_estimate() const {
  double second = second_order_prefactor * second_order_coefficient * std::pow(r, second_order_exponent);
  if (second_order_log) second *= std::log(r);
  return leading_term + fiber_term + second;
}

double continuous_sphere_energy(int dim, double s) {
  if (dim < 1) throw DomainError("continuous_sphere_energy: dim must be >= 1");
  if (!(s > 0.0 && s < dim)) {
    throw DomainError("continuous_sphere_energy: s must lie in (0, dim)");
  }
  const double log_v = (dim - s - 1.0) * std::log(2.0) + log_gamma((dim + 1.0) / 2.0) +
                       log_gamma((dim - s) / 2.0) - 0.5 * std::log(std::numbers::pi) -
                       log_gamma(dim - s / 2.0);
  return std::exp(log_v);
}

double continuous_projective_energy(int d, double s) {
  if (d < 1) throw DomainError("continuous_projective_energy: d must be >= 1");
  require_riesz_range(d, s, "continuous_projective_energy");
  return d / (d - s / 2.0);
}

double roots_of_unity_2energy(int k) {
  if (k < 1) throw DomainError("roots_of_unity_2energy: k must be >= 1");
  const double kk = k;
  return kk * (kk * kk - 1.0) / 12.0;
}

ExpectedEnergy expected_projective_riesz(int d, int L, double s) {
  require_degree(d, L, "expected_projective_riesz");
  require_riesz_range(d, s, "expected_projective_riesz");
  const double r = rank(d, L);
  const double a = d - s / 2.0;
  ExpectedEnergy e;
  e.r = r;
  e.leading_term = d / a * r * r;
  e.exact = e.leading_term - r * r * d * beta(a, L + 1.0);
  e.second_order_coefficient =
      -d * std::exp(log_gamma(a) - (1.0 - s / (2.0 * d)) * log_factorial(d));
  e.second_order_exponent = 1.0 + s / (2.0 * d);
  return e;
}

ExpectedEnergy expected_projective_log(int d, int L) {
  require_degree(d, L, "expected_projective_log");
  const double r = rank(d, L);
  double harmonic = 0.0;
  for (int j = 0; j <= L; ++j) harmonic += 1.0 / (d + j);
  ExpectedEnergy e;
  e.r = r;
  e.leading_term = r * r / (2.0 * d);
  // d/ds at s = 0 of the projective s-energy expectation, using
  // d/dt B(t, m) = -B(t, m) sum_{j<m} 1/(t + j).
  e.exact = e.leading_term - r * r * d / 2.0 * beta(d, L + 1.0) * harmonic;
  e.second_order_coefficient = -1.0 / (2.0 * d);
  e.second_order_exponent = 1.0;
  e.second_order_log = true;
  return e;
}

ExpectedEnergy expected_sphere_2energy_exact(int d, int L, int k) {
  require_degree(d, L, "expected_sphere_2energy_exact");
  if (k < 1) throw DomainError("expected_sphere_2energy_exact: k must be >= 1");
  const ExpectedEnergy cross = expected_projective_riesz(d, L, 1.0);
  const double r = cross.r;
  const double kk = k;
  ExpectedEnergy e;
  e.r = r;
  // Fibers contribute the roots-of-unity energy exactly; distinct fibers
  // contribute (k^2/2) E[sum 1/sin d_FS].
  e.exact = r * roots_of_unity_2energy(k) + kk * kk / 2.0 * cross.exact;
  e.leading_term = d / (2.0 * d - 1.0) * (kk * r) * (kk * r);
  e.fiber_term = r * kk * kk * kk / 12.0;
  e.second_order_coefficient =
      -d * std::exp(log_gamma(d - 0.5) - (1.0 - 1.0 / (2.0 * d)) * log_factorial(d)) / 2.0;
  e.second_order_exponent = 1.0 + 1.0 / (2.0 * d);
  e.second_order_prefactor = kk * kk;
  return e;
}

ExpectedEnergy expected_green_energy(int d, int L) {
  if (d < 2) throw DomainError("expected_green_energy: d must be >= 2");
  require_degree(d, L, "expected_green_energy");
  const double scale = std::exp(log_gamma(d) - d * std::log(std::numbers::pi));  // (d-1)!/pi^d
  double bracket = expected_projective_log(d, L).exact;
  double harmonic = 0.0;
  for (int k = 1; k < d; ++k) {
    bracket += expected_projective_riesz(d, L, 2.0 * (d - k)).exact / (2.0 * (d - k));
    harmonic += 1.0 / k;
  }
  const double r = rank(d, L);
  ExpectedEnergy e;
  e.r = r;
  e.exact = scale / 2.0 * bracket - r * (r - 1.0) * scale / 4.0 * (1.0 / d + 2.0 * harmonic);
  e.leading_term = 0.0;
  e.second_order_coefficient =
      -std::exp((1.0 - 1.0 / d) * log_factorial(d) - d * std::log(std::numbers::pi)) /
      (4.0 * (d - 1.0));
  e.second_order_exponent = 2.0 - 1.0 / d;
  return e;
}

double second_order_profile(int d, double A) {
  if (d < 1) throw DomainError("second_order_profile: d must be >= 1");
  const double q = 2.0 / (2.0 * d + 1.0);
  const double c = d * std::exp(log_gamma(d - 0.5) - (1.0 - 1.0 / (2.0 * d)) * log_factorial(d)) / 2.0;
  return std::pow(A, 2.0 - q) / 12.0 - c * std::pow(A, 1.0 - q);
}

BoundConstants bound_constants(int d) {
  if (d < 1) throw DomainError("bound_constants: d must be >= 1");
  const double q = 2.0 / (2.0 * d + 1.0);
  const double lg = log_gamma(d - 0.5);
  const double lf = log_factorial(d);
  BoundConstants b;
  b.d = d;
  b.A_opt = 3.0 * (2.0 * d - 1.0) / 2.0 * std::exp(lg - (1.0 - 1.0 / (2.0 * d)) * lf);
  b.f_at_A_opt = second_order_profile(d, b.A_opt);
  const double log_proj = (1.0 - q) * std::log(3.0) + (1.0 - q) * std::log(2.0 * d - 1.0) +
                          std::log(2.0 * d + 1.0) + (2.0 - q) * lg -
                          (4.0 - q) * std::log(2.0) - (2.0 - 2.0 * q) * lf;
  b.projective_bound = std::exp(log_proj);
  const double log_harm = (1.0 - q) * std::log(2.0) + q * std::lgamma(2.0 * d + 2.0) -
                          std::log(2.0 * d - 1.0) - std::log(2.0 * d + 3.0);
  b.harmonic_bound = std::exp(log_harm);
  return b;
}

double quadrature_expected_projective_riesz(int d, int L, double s,
                                            const QuadratureOptions& options) {
  require_degree(d, L, "quadrature_expected_projective_riesz");
  require_riesz_range(d, s, "quadrature_expected_projective_riesz");
  const KernelParams params(d, L);
  const double diag = params.diagonal();
  const double r = static_cast<double>(params.r());
  // With p fixed at e_1 and q = psi_d(z): |<p,q>|^2 = 1/(1+|z|^2) and
  // sin^2 d_FS = |z|^2/(1+|z|^2).
  auto radial = [&](double t) {
    const double t2 = t * t;
    const double log_one_plus = std::log1p(t2);
    const double pair = -std::expm1(-L * log_one_plus);  // 1 - |<p,q>|^{2L}
    const double sin2 = t2 / (1.0 + t2);
    return pair * std::pow(sin2, -s / 2.0) * chart_jacobian_radial(t2, d);
  };
  const QuadratureResult res = radial_chart_integral(d, radial, options);
  return r * diag * res.value;
}

}  // namespace pensemble
