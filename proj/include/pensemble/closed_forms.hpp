#pragma once

#include "pensemble/quadrature.hpp"

namespace pensemble {

/// Exact expected energy together with its large-r expansion
///   leading_term + fiber_term
///     + second_order_prefactor * second_order_coefficient * r^exponent [* log r].
struct ExpectedEnergy {
  double exact = 0.0;
  double leading_term = 0.0;
  double second_order_coefficient = 0.0;
  double second_order_exponent = 0.0;
  bool second_order_log = false;
  double second_order_prefactor = 1.0;
  double fiber_term = 0.0;
  double r = 0.0;

  double asymptotic_estimate() const;
};

/// Continuous s-energy of the normalized surface measure on S^dim, 0 < s < dim.
double continuous_sphere_energy(int dim, double s);

/// Continuous s-energy of the uniform measure on CP^d for sin^{-s}: d/(d - s/2).
double continuous_projective_energy(int d, double s);

/// 2-energy of the k-th roots of unity, k(k^2 - 1)/12.
double roots_of_unity_2energy(int k);

ExpectedEnergy expected_projective_riesz(int d, int L, double s);
ExpectedEnergy expected_projective_log(int d, int L);
ExpectedEnergy expected_sphere_2energy_exact(int d, int L, int k);
ExpectedEnergy expected_green_energy(int d, int L);

struct BoundConstants {
  int d = 0;
  double A_opt = 0.0;
  double f_at_A_opt = 0.0;
  double projective_bound = 0.0;
  double harmonic_bound = 0.0;
};

/// Coefficient f(A) of n^{1 + 2/(2d+1)} when k = A r^{1/(2d)} fibers are used.
double second_order_profile(int d, double A);

BoundConstants bound_constants(int d);

/// Radial-integral evaluation of the expected projective s-energy; independent
/// of the Beta-function closed form.
double quadrature_expected_projective_riesz(int d, int L, double s,
                                            const QuadratureOptions& options = {});

}  // namespace pensemble
