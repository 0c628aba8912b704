#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pensemble/sphere_lift.hpp"
#include "test_support.hpp"

using namespace pensemble;
namespace pt = pensemble::testing;

namespace {
constexpr double kPi = std::numbers::pi;

double chordal(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}
}  // namespace

TEST_CASE("realify") {
  CHECK(realify(CVector{1.0, 0.0}) == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(realify(CVector{cplx{0.0, 1.0}, 0.0}) == std::vector<double>{0.0, 1.0, 0.0, 0.0});
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const CVector v = pt::random_complex(4, rng);
    const std::vector<double> x = realify(v);
    double n = 0.0;
    for (double c : x) n += c * c;
    CHECK(pt::relative_error(n, norm_squared(v)) < 1e-14);
  }
}

TEST_CASE("k = 1, r = 1 lift is a unit phase multiple") {
  Rng rng = make_rng(4);
  const ProjectiveSample s = sample_projective_ensemble(KernelParams(2, 0), rng);
  const SphereConfiguration cfg = lift_to_sphere(s, 1, rng);
  REQUIRE(cfg.points.size() == 1);
  REQUIRE(cfg.fibers() == 1);
  CHECK(cfg.k == 1);
  CHECK(cfg.d == 2);
  CHECK(std::abs(norm_squared(cfg.points[0]) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(inner(cfg.points[0], CVector(s.points[0].coords().begin(),
                                                       s.points[0].coords().end()))) - 1.0) < 1e-12);
  CHECK(cfg.phases[0] >= 0.0);
  CHECK(cfg.phases[0] < 2.0 * kPi);
}

TEST_CASE("lift layout and norms") {
  Rng rng = make_rng(12);
  const ProjectiveSample s = sample_projective_ensemble(KernelParams(2, 2), rng);
  const int k = 5;
  const SphereConfiguration cfg = lift_to_sphere(s, k, rng);
  CHECK(cfg.points.size() == k * s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      const CVector& y = cfg.points[i * k + j];
      CHECK(std::abs(norm_squared(y) - 1.0) < 1e-12);
      const cplx phase = std::polar(1.0, cfg.phases[i] + 2.0 * kPi * j / k);
      for (std::size_t c = 0; c < y.size(); ++c) CHECK(std::abs(y[c] - phase * s.points[i][c]) < 1e-14);
    }
  }
}

TEST_CASE("within-fiber chordal distances for k = 4") {
  const ProjectivePoint x({cplx{0.3, -0.2}, cplx{0.5, 0.1}, cplx{-0.4, 0.6}});
  const std::vector<double> phases{0.37};
  const SphereConfiguration cfg = lift_with_phases({x}, 4, phases);
  CHECK(chordal(cfg.points[0], cfg.points[1]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(chordal(cfg.points[0], cfg.points[2]) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(chordal(cfg.points[0], cfg.points[3]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("fiber energy is k(k^2 - 1)/12") {
  const ProjectivePoint x({cplx{1.0, 0.5}, cplx{-0.3, 0.2}});
  const std::vector<double> phases{1.1};
  for (int k = 1; k <= 64; ++k) {
    const SphereConfiguration cfg = lift_with_phases({x}, k, phases);
    double e = 0.0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b) e += 1.0 / std::pow(chordal(cfg.points[a], cfg.points[b]), 2);
    const double want = k * (static_cast<double>(k) * k - 1.0) / 12.0;
    CHECK(std::abs(e - want) <= 1e-10 * std::max(1.0, want));
  }
}

TEST_CASE("phase average of the inverse squared chord") {
  for (double t : {0.0, 0.3, 0.75, 0.95}) {
    const CVector x1{1.0, 0.0};
    const CVector x2{t, std::sqrt(1.0 - t * t)};
    const int grid = 10000;
    double avg = 0.0;
    for (int m = 0; m < grid; ++m) {
      const cplx ph = std::polar(1.0, 2.0 * kPi * m / grid);
      double n = std::norm(ph * x1[0] - x2[0]) + std::norm(ph * x1[1] - x2[1]);
      avg += 1.0 / n;
    }
    avg /= grid;
    CHECK(std::abs(avg - 1.0 / (2.0 * std::sqrt(1.0 - t * t))) < 1e-6);
  }
}

TEST_CASE("inter-fiber overlaps do not depend on the phase indices") {
  Rng rng = make_rng(6);
  const ProjectiveSample s = sample_projective_ensemble(KernelParams(1, 2), rng);
  const int k = 3;
  const SphereConfiguration cfg = lift_to_sphere(s, k, rng);
  const double ref = std::abs(inner(cfg.points[0], cfg.points[k]));
  for (int j1 = 0; j1 < k; ++j1)
    for (int j2 = 0; j2 < k; ++j2)
      CHECK(std::abs(std::abs(inner(cfg.points[j1], cfg.points[k + j2])) - ref) < 1e-14);
}

TEST_CASE("lift phases are uniform") {
  std::vector<double> theta;
  const KernelParams params(1, 1);
  for (std::uint64_t t = 0; t < 5000; ++t) {
    Rng rng = derive_trial_rng(3, t);
    const ProjectiveSample s = sample_projective_ensemble(params, rng);
    const SphereConfiguration cfg = lift_to_sphere(s, 2, rng);
    theta.insert(theta.end(), cfg.phases.begin(), cfg.phases.end());
  }
  CHECK(pt::ks_one_sample_pvalue(theta, [](double x) { return x / (2.0 * kPi); }) > 1e-3);
}

TEST_CASE("realify a configuration and a projective point list") {
  const ProjectivePoint x({cplx{0.0, 1.0}, 0.0});
  const std::vector<double> phases{0.0};
  const SphereConfiguration cfg = lift_with_phases({x}, 2, phases);
  const auto real = realify(cfg);
  REQUIRE(real.size() == 2);
  CHECK(real[0] == std::vector<double>{0.0, 1.0, 0.0, 0.0});
  CHECK(real[1][1] == doctest::Approx(-1.0));
  CHECK(realify(std::vector<ProjectivePoint>{x})[0] == std::vector<double>{0.0, 1.0, 0.0, 0.0});
}
