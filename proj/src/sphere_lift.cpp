#include "pensemble/sphere_lift.hpp"

#include <numbers>

#include "pensemble/errors.hpp"

namespace pensemble {

SphereConfiguration lift_with_phases(const std::vector<ProjectivePoint>& points, int k,
                                     std::span<const double> phases) {
  if (k < 1) throw DomainError("lift_to_sphere: k must be >= 1");
  if (phases.size() != points.size()) {
    throw DomainError("lift_to_sphere: need one phase per projective point");
  }
  SphereConfiguration out;
  out.k = k;
  out.d = points.empty() ? 0 : static_cast<int>(points.front().dim());
  out.phases.assign(phases.begin(), phases.end());
  out.points.reserve(points.size() * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = points[i].coords();
    for (int j = 0; j < k; ++j) {
      const cplx w = std::polar(1.0, phases[i] + 2.0 * std::numbers::pi * j / k);
      CVector y(x.begin(), x.end());
      for (cplx& c : y) c *= w;
      out.points.push_back(std::move(y));
    }
  }
  return out;
}

SphereConfiguration lift_to_sphere(const ProjectiveSample& sample, int k, Rng& rng) {
  if (k < 1) throw DomainError("lift_to_sphere: k must be >= 1");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> phases(sample.points.size());
  for (double& t : phases) {
    t = angle(rng);
    if (t >= 2.0 * std::numbers::pi) t = 0.0;  // generate_canonical may round up
  }
  SphereConfiguration out = lift_with_phases(sample.points, k, phases);
  out.d = sample.params.d();
  return out;
}

std::vector<double> realify(std::span<const cplx> v) {
  std::vector<double> out;
  out.reserve(2 * v.size());
  for (const cplx& c : v) {
    out.push_back(c.real());
    out.push_back(c.imag());
  }
  return out;
}

std::vector<std::vector<double>> realify(const SphereConfiguration& config) {
  std::vector<std::vector<double>> out;
  out.reserve(config.points.size());
  for (const CVector& p : config.points) out.push_back(realify(p));
  return out;
}

std::vector<std::vector<double>> realify(const std::vector<ProjectivePoint>& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const ProjectivePoint& p : points) out.push_back(realify(p.coords()));
  return out;
}

}  // namespace pensemble
