#include "pensemble/sampler.hpp"

#include <cmath>
#include <string>

#include "pensemble/errors.hpp"

namespace pensemble {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// residual -= <residual, u> u for every u in basis (modified Gram-Schmidt).
void project_out(CVector& residual, const std::vector<CVector>& basis) {
  for (const CVector& u : basis) {
    const cplx c = inner(residual, u);
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= c * u[j];
  }
}

}  // namespace

Rng derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
  const std::uint64_t a = splitmix64(master_seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(trial_index + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

ProjectivePoint sample_uniform_cp(int d, Rng& rng) {
  if (d < 1) throw DomainError("sample_uniform_cp: d must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector c(d + 1);
  for (cplx& x : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x = {re, im};
  }
  return ProjectivePoint(std::move(c));
}

ProjectiveSample sample_projective_ensemble(const KernelParams& params, Rng& rng,
                                            std::uint64_t max_rejections_per_point,
                                            SamplerTrace* trace) {
  if (max_rejections_per_point == 0) {
    throw DomainError("sample_projective_ensemble: max_rejections_per_point must be positive");
  }
  const FeatureMap features(params);
  const std::size_t r = params.r();
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  ProjectiveSample out{{}, params, 0};
  out.points.reserve(r);
  std::vector<CVector> basis;
  basis.reserve(r);
  if (trace) trace->proposals.assign(r, 0);

  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t attempts = 0;
    while (true) {
      if (attempts == max_rejections_per_point) {
        throw RejectionBudgetExceeded("sample_projective_ensemble: point " + std::to_string(i) +
                                      " rejected " + std::to_string(attempts) + " proposals");
      }
      ++attempts;
      ProjectivePoint q = sample_uniform_cp(params.d(), rng);
      CVector residual = features.projective(q);
      const double full = norm_squared(residual);
      project_out(residual, basis);
      double res = norm_squared(residual);
      if (res < 0.5 * full) {
        project_out(residual, basis);
        res = norm_squared(residual);
      }
      const double accept = res / full;
      if (unif(rng) < accept) {
        const double scale = 1.0 / std::sqrt(res);
        for (cplx& x : residual) x *= scale;
        basis.push_back(std::move(residual));
        out.points.push_back(std::move(q));
        break;
      }
    }
    if (trace) trace->proposals[i] = attempts;
  }
  return out;
}

ProjectiveSample sample_projective_ensemble(const SamplerConfig& config) {
  Rng rng = make_rng(config.seed);
  ProjectiveSample s =
      sample_projective_ensemble(config.params, rng, config.max_rejections_per_point);
  s.seed = config.seed;
  return s;
}

bool has_coincident_points(const std::vector<ProjectivePoint>& points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (projectively_equal(points[i], points[j], tol)) return true;
    }
  }
  return false;
}

}  // namespace pensemble
