#pragma once

#include <cstdint>
#include <vector>

#include "pensemble/projective_geometry.hpp"

namespace pensemble {

/// Complex dimension d, degree L and rank r = binomial(d+L, d) of the
/// projective ensemble kernel.
class KernelParams {
 public:
  KernelParams(int d, int L);

  int d() const noexcept { return d_; }
  int L() const noexcept { return L_; }
  std::uint64_t r() const noexcept { return r_; }

  /// Constant diagonal of the projective kernel, r d! / pi^d.
  double diagonal() const noexcept { return diagonal_; }

  friend bool operator==(const KernelParams&, const KernelParams&) = default;

 private:
  int d_;
  int L_;
  std::uint64_t r_;
  double diagonal_;
};

/// Exact binomial coefficient; throws DomainError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

using MultiIndex = std::vector<int>;

/// All alpha in N^d with |alpha| <= L in graded-lexicographic order: by total
/// degree, then lexicographically descending within a degree.
std::vector<MultiIndex> enumerate_multi_indices(int d, int L);

/// (d+L)! / (alpha_1! ... alpha_d! (L - |alpha|)!) / pi^d, via log-Gamma.
double basis_coefficient(const MultiIndex& alpha, const KernelParams& params);
double log_basis_coefficient(const MultiIndex& alpha, const KernelParams& params);

/// Evaluates every basis function at once. Construction precomputes the
/// multi-index table so that each evaluation is O(r).
class FeatureMap {
 public:
  enum class Form { automatic, direct, log_polar };

  /// Degree from which Form::automatic switches to log-magnitude evaluation.
  static constexpr int kLogFormThreshold = 200;

  explicit FeatureMap(KernelParams params);

  const KernelParams& params() const noexcept { return params_; }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }

  /// Orthonormal basis of the chart space evaluated at z:
  /// sqrt(C_alpha) z^alpha / (1 + |z|^2)^{(d+L+1)/2}.
  CVector chart(const ChartPoint& z, Form form = Form::automatic) const;

  /// Homogeneous version on a unit representative x:
  /// sqrt(C_alpha) x_0^{L-|alpha|} x_1^{alpha_1} ... x_d^{alpha_d}.
  /// Equals chart(z) / sqrt(chart_jacobian(z)) up to a unit phase, and its
  /// squared norm is params().diagonal() for every x.
  CVector projective(const ProjectivePoint& x, Form form = Form::automatic) const;

 private:
  bool use_log(Form form) const;

  KernelParams params_;
  std::vector<MultiIndex> indices_;
  std::vector<int> degree_;
  // Position of alpha - e_var in indices_, for incremental monomials.
  std::vector<std::size_t> parent_;
  std::vector<int> var_;
  std::vector<double> sqrt_coeff_;
  std::vector<double> log_coeff_;
};

CVector feature_vector(const ChartPoint& z, const KernelParams& params);

/// Reproducing kernel on C^d:
/// (r d!/pi^d) (1 + <z,w>)^L / ((1+|z|^2)(1+|w|^2))^{(d+L+1)/2}.
cplx kernel_eval(const ChartPoint& z, const ChartPoint& w, const KernelParams& params);

/// |K_*(p,q)| = (r d!/pi^d) |<p,q>|^L on CP^d.
double projective_kernel_magnitude(const ProjectivePoint& p, const ProjectivePoint& q,
                                   const KernelParams& params);

/// Two-point joint intensity K(p,p)K(q,q) - |K(p,q)|^2.
double joint_intensity_2(const ProjectivePoint& p, const ProjectivePoint& q,
                         const KernelParams& params);

}  // namespace pensemble
