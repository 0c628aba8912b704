#pragma once

#include <span>
#include <vector>

#include "pensemble/sampler.hpp"

namespace pensemble {

/// n = k r unit vectors on S^{2d+1} in C^{d+1}. Point (i, j) is stored at
/// index i*k + j and equals exp(i(theta_i + 2 pi j / k)) x_i.
struct SphereConfiguration {
  std::vector<CVector> points;
  int d = 0;
  int k = 1;
  std::vector<double> phases;

  std::size_t fibers() const noexcept { return phases.size(); }
};

/// Lift with phases theta_i drawn uniformly on [0, 2 pi) from rng, one per
/// projective point in order. Callers sampling a full trial draw the phases
/// after the ensemble from the same stream.
SphereConfiguration lift_to_sphere(const ProjectiveSample& sample, int k, Rng& rng);

/// Deterministic lift with the given phases.
SphereConfiguration lift_with_phases(const std::vector<ProjectivePoint>& points, int k,
                                     std::span<const double> phases);

/// C^{d+1} -> R^{2d+2}, interleaving (re, im) per coordinate.
std::vector<double> realify(std::span<const cplx> v);
std::vector<std::vector<double>> realify(const SphereConfiguration& config);
std::vector<std::vector<double>> realify(const std::vector<ProjectivePoint>& points);

}  // namespace pensemble
