#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pensemble {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Hermitian inner product, linear in the first argument: sum a_i * conj(b_i).
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);

/// Point of CP^d stored as a unit-norm representative in C^{d+1}.
/// The constructor normalizes; a zero or empty vector is rejected.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(CVector coords);

  /// Complex dimension d of the ambient projective space.
  std::size_t dim() const noexcept { return coords_.size() - 1; }
  std::span<const cplx> coords() const noexcept { return coords_; }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }

  /// Same point, representative multiplied by exp(i*phase).
  ProjectivePoint rotated(double phase) const;

 private:
  CVector coords_;
};

/// Point z of the affine chart C^d (the chart misses the hyperplane x_0 = 0).
struct ChartPoint {
  CVector z;

  std::size_t dim() const noexcept { return z.size(); }
  double norm_squared() const;
};

inline constexpr double kProjectiveEqualityTolerance = 1e-9;
inline constexpr double kChartBoundaryTolerance = 1e-12;

/// sin of the Fubini-Study distance, sqrt(1 - |<p,q>|^2), in [0,1].
double fubini_sin_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// True when 1 - |<p,q>| <= tol.
bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q,
                        double tol = kProjectiveEqualityTolerance);

/// z -> (1, z) / sqrt(1 + |z|^2).
ProjectivePoint chart_to_projective(const ChartPoint& z);

/// (p_0, ..., p_d) -> (p_1/p_0, ..., p_d/p_0). Throws PointAtInfinity when
/// |p_0| is below kChartBoundaryTolerance.
ChartPoint projective_to_chart(const ProjectivePoint& p);

/// Jacobian of the chart map against the Fubini-Study volume,
/// (1 + |z|^2)^{-(d+1)}.
double chart_jacobian(const ChartPoint& z, int d);
double chart_jacobian_radial(double norm_squared, int d);

/// Fubini-Study volume of CP^d, pi^d / d!.
double projective_volume(int d);

}  // namespace pensemble
