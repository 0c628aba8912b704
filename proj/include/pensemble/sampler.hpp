#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pensemble/kernel.hpp"
#include "pensemble/projective_geometry.hpp"

namespace pensemble {

using Rng = std::mt19937_64;

/// Independent stream for one Monte Carlo trial. Counter-based: the state
/// depends only on (master_seed, trial_index), never on execution order.
Rng derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index);

/// Stream used by single-shot commands; identical to trial 0 of the seed.
inline Rng make_rng(std::uint64_t seed) { return derive_trial_rng(seed, 0); }

struct SamplerConfig {
  KernelParams params;
  std::uint64_t seed = 0;
  std::uint64_t max_rejections_per_point = 10'000'000;
};

struct ProjectiveSample {
  std::vector<ProjectivePoint> points;
  KernelParams params;
  std::uint64_t seed = 0;
};

/// Per-point proposal counts, for diagnostics and acceptance-rate tests.
struct SamplerTrace {
  std::vector<std::uint64_t> proposals;
};

/// Uniform point on CP^d: 2(d+1) standard Gaussians as a complex vector,
/// normalized.
ProjectivePoint sample_uniform_cp(int d, Rng& rng);

/// Exact draw of the projective ensemble (r points).
///
/// Sequential projection-kernel sampler. Step i proposes q uniformly on CP^d
/// and accepts with probability |v(q) - P_U v(q)|^2 / K(q,q), where v is the
/// homogeneous feature vector and U the orthonormal span of the features
/// already chosen. The residual is orthogonalized with modified Gram-Schmidt
/// and a second pass whenever its norm drops below 1/sqrt(2) of |v(q)|.
ProjectiveSample sample_projective_ensemble(const KernelParams& params, Rng& rng,
                                            std::uint64_t max_rejections_per_point = 10'000'000,
                                            SamplerTrace* trace = nullptr);

ProjectiveSample sample_projective_ensemble(const SamplerConfig& config);

/// True if some pair of points is projectively equal within tol.
bool has_coincident_points(const std::vector<ProjectivePoint>& points, double tol);

}  // namespace pensemble
