#pragma once

#include <functional>

namespace pensemble {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct QuadratureOptions {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-10;
  unsigned max_depth = 15;
};

/// Adaptive Gauss-Kronrod on (0, 1). The interval is split geometrically toward
/// both ends, where the integrands of this library carry power and log
/// singularities, and each piece is integrated adaptively. Throws
/// QuadratureError if the summed error estimate misses the tolerance.
QuadratureResult integrate_unit_interval(const std::function<double(double)>& f,
                                         const QuadratureOptions& options = {});

/// Integral over C^d of a radial function F(|z|) against Lebesgue measure,
/// (2 pi^d/(d-1)!) int_0^inf F(t) t^{2d-1} dt, computed after the substitution
/// u = t^2 / (1 + t^2).
QuadratureResult radial_chart_integral(int d, const std::function<double(double t)>& radial,
                                       const QuadratureOptions& options = {});

}  // namespace pensemble
