#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "pensemble/errors.hpp"
#include "pensemble/kernel.hpp"
#include "pensemble/quadrature.hpp"
#include "test_support.hpp"

using namespace pensemble;
namespace pt = pensemble::testing;

namespace {
constexpr double kPi = std::numbers::pi;

double inner_abs(const CVector& a, const CVector& b) { return std::abs(inner(a, b)); }
}  // namespace

TEST_CASE("KernelParams rank") {
  CHECK(KernelParams(2, 1).r() == 3);
  CHECK(KernelParams(2, 3).r() == 10);
  CHECK(KernelParams(1, 0).r() == 1);
  CHECK(KernelParams(3, 5).r() == 56);
  CHECK(KernelParams(2, 1).diagonal() == doctest::Approx(6.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(200, 100), DomainError);
  CHECK_THROWS_AS(KernelParams(0, 1), DomainError);
  CHECK_THROWS_AS(KernelParams(1, -1), DomainError);
}

TEST_CASE("enumerate_multi_indices") {
  CHECK(enumerate_multi_indices(2, 1) == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(enumerate_multi_indices(2, 3).size() == 10);
  CHECK(enumerate_multi_indices(1, 0) == std::vector<MultiIndex>{{0}});
  CHECK(enumerate_multi_indices(2, 2) ==
        std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});

  for (int d = 1; d <= 4; ++d) {
    for (int L = 0; L <= 6; ++L) {
      const auto idx = enumerate_multi_indices(d, L);
      CHECK(idx.size() == KernelParams(d, L).r());
      std::set<MultiIndex> unique(idx.begin(), idx.end());
      CHECK(unique.size() == idx.size());
      int prev_degree = 0;
      for (const MultiIndex& a : idx) {
        const int deg = std::accumulate(a.begin(), a.end(), 0);
        CHECK(deg <= L);
        CHECK(deg >= prev_degree);
        prev_degree = deg;
      }
    }
  }
}

TEST_CASE("basis_coefficient") {
  CHECK(basis_coefficient({0, 0}, KernelParams(2, 1)) == doctest::Approx(6.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(basis_coefficient({0}, KernelParams(1, 0)) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(basis_coefficient({1, 1}, KernelParams(2, 1)), DomainError);
  CHECK_THROWS_AS(basis_coefficient({1}, KernelParams(2, 1)), DomainError);

  const KernelParams params(3, 7);
  MultiIndex alpha{1, 2, 4};
  const double ref = basis_coefficient(alpha, params);
  std::sort(alpha.begin(), alpha.end());
  do {
    CHECK(basis_coefficient(alpha, params) == doctest::Approx(ref).epsilon(1e-13));
  } while (std::next_permutation(alpha.begin(), alpha.end()));
}

TEST_CASE("feature_vector at the origin") {
  const CVector v = feature_vector(ChartPoint{{0.0, 0.0}}, KernelParams(2, 1));
  REQUIRE(v.size() == 3);
  CHECK(v[0].real() == doctest::Approx(std::sqrt(6.0 / (kPi * kPi))).epsilon(1e-14));
  CHECK(v[1] == cplx{0.0, 0.0});
  CHECK(v[2] == cplx{0.0, 0.0});
}

TEST_CASE("kernel_eval values and symmetry") {
  const KernelParams p21(2, 1);
  CHECK(kernel_eval(ChartPoint{{0.0, 0.0}}, ChartPoint{{0.0, 0.0}}, p21).real() ==
        doctest::Approx(6.0 / (kPi * kPi)).epsilon(1e-14));

  std::mt19937_64 rng(17);
  for (int d = 1; d <= 3; ++d) {
    for (int L = 0; L <= 5; ++L) {
      const KernelParams params(d, L);
      const FeatureMap fm(params);
      for (int trial = 0; trial < 10; ++trial) {
        const ChartPoint z{pt::random_complex(d, rng)};
        const ChartPoint w{pt::random_complex(d, rng)};
        const cplx kzw = kernel_eval(z, w, params);
        const cplx kwz = kernel_eval(w, z, params);
        CHECK(std::abs(kzw - std::conj(kwz)) <= 1e-13 * (1.0 + std::abs(kzw)));

        const cplx kzz = kernel_eval(z, z, params);
        CHECK(kzz.real() > 0.0);
        CHECK(std::abs(kzz.imag()) <= 1e-14 * kzz.real());

        // Gram identity against the basis.
        const CVector vz = fm.chart(z);
        const CVector vw = fm.chart(w);
        CHECK(std::abs(inner(vz, vw) - kzw) <= 1e-10 * (1.0 + std::abs(kzw)));
        CHECK(pt::relative_error(norm_squared(vz), kzz.real()) < 1e-10);

        // Pushforward to CP^d.
        const double lhs = std::abs(kzw) / std::sqrt(chart_jacobian(z, d) * chart_jacobian(w, d));
        const double rhs =
            projective_kernel_magnitude(chart_to_projective(z), chart_to_projective(w), params);
        CHECK(pt::relative_error(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("L = 0 kernel diagonal is a multiple of the chart Jacobian") {
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 4; ++d) {
    const KernelParams params(d, 0);
    const ChartPoint z{pt::random_complex(d, rng)};
    const double want = std::tgamma(d + 1.0) / std::pow(kPi, d) * chart_jacobian(z, d);
    CHECK(pt::relative_error(kernel_eval(z, z, params).real(), want) < 1e-13);
  }
}

TEST_CASE("kernel trace normalization by radial quadrature") {
  for (int d = 1; d <= 3; ++d) {
    for (int L : {0, 1, 3, 6}) {
      const KernelParams params(d, L);
      auto diag = [&](double t) {
        ChartPoint z{CVector(d, 0.0)};
        z.z[0] = t;
        return kernel_eval(z, z, params).real();
      };
      const double trace = radial_chart_integral(d, diag).value;
      CHECK(pt::relative_error(trace, static_cast<double>(params.r())) < 1e-9);
    }
  }
}

TEST_CASE("basis functions have unit norm") {
  // d = 1: radial integral of |v_a|^2.
  for (int L = 0; L <= 5; ++L) {
    const KernelParams params(1, L);
    for (int a = 0; a <= L; ++a) {
      const double c = basis_coefficient({a}, params);
      const double norm = radial_chart_integral(1, [&](double t) {
                            return c * std::pow(t, 2 * a) * std::pow(1.0 + t * t, -(L + 2));
                          }).value;
      CHECK(pt::relative_error(norm, 1.0) < 1e-9);
    }
  }
  // d = 2: product of two radial integrals (polar coordinates in each factor).
  const int L = 2;
  const KernelParams params(2, L);
  for (const MultiIndex& alpha : enumerate_multi_indices(2, L)) {
    const double c = basis_coefficient(alpha, params);
    const double outer = integrate_unit_interval([&](double u1) {
                           const double t1 = std::sqrt(u1 / (1.0 - u1));
                           const double inner_int = integrate_unit_interval([&](double u2) {
                                                      const double t2 = std::sqrt(u2 / (1.0 - u2));
                                                      const double jac2 = 0.5 / ((1.0 - u2) * (1.0 - u2));
                                                      return std::pow(t2, 2 * alpha[1]) *
                                                             std::pow(1.0 + t1 * t1 + t2 * t2, -(L + 3)) *
                                                             jac2;
                                                    }).value;
                           const double jac1 = 0.5 / ((1.0 - u1) * (1.0 - u1));
                           return std::pow(t1, 2 * alpha[0]) * inner_int * jac1;
                         }).value;
    // (2 pi)^2 from the two angular integrals.
    CHECK(pt::relative_error(4.0 * kPi * kPi * c * outer, 1.0) < 1e-8);
  }
}

TEST_CASE("projective kernel magnitude") {
  const KernelParams params(2, 1);
  const ProjectivePoint e1({1.0, 0.0, 0.0});
  const ProjectivePoint e2({0.0, 1.0, 0.0});
  CHECK(projective_kernel_magnitude(e1, e2, params) == 0.0);
  CHECK(projective_kernel_magnitude(e1, e1, params) == doctest::Approx(params.diagonal()));
  // r / Vol(CP^d)
  CHECK(params.diagonal() == doctest::Approx(3.0 / projective_volume(2)).epsilon(1e-14));
  // |<p,q>| = 1/2
  const ProjectivePoint q({0.5, std::sqrt(0.75), 0.0});
  CHECK(projective_kernel_magnitude(e1, q, params) == doctest::Approx(3.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(projective_kernel_magnitude(e1, ProjectivePoint({1.0, 0.0}), params), DomainError);
}

TEST_CASE("projective kernel magnitude invariances") {
  std::mt19937_64 rng(23);
  const KernelParams params(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjectivePoint p(pt::random_complex(4, rng));
    const ProjectivePoint q(pt::random_complex(4, rng));
    const double base = projective_kernel_magnitude(p, q, params);
    CHECK(pt::relative_error(projective_kernel_magnitude(p.rotated(0.7), q.rotated(-2.1), params), base) < 1e-12);
    const auto u = pt::random_unitary(4, rng);
    const ProjectivePoint up(pt::apply(u, CVector(p.coords().begin(), p.coords().end())));
    const ProjectivePoint uq(pt::apply(u, CVector(q.coords().begin(), q.coords().end())));
    CHECK(pt::relative_error(projective_kernel_magnitude(up, uq, params), base) < 1e-9);
  }
}

TEST_CASE("homogeneous features match the pushforward kernel") {
  std::mt19937_64 rng(29);
  for (int d = 1; d <= 3; ++d) {
    for (int L : {0, 1, 4, 9}) {
      const KernelParams params(d, L);
      const FeatureMap fm(params);
      for (int trial = 0; trial < 10; ++trial) {
        const ProjectivePoint p(pt::random_complex(d + 1, rng));
        const ProjectivePoint q(pt::random_complex(d + 1, rng));
        const CVector hp = fm.projective(p);
        const CVector hq = fm.projective(q);
        CHECK(pt::relative_error(norm_squared(hp), params.diagonal()) < 1e-12);
        CHECK(std::abs(inner_abs(hp, hq) - projective_kernel_magnitude(p, q, params)) <
              1e-12 * params.diagonal());
        // Chart features divided by sqrt(Jacobian) agree up to one phase.
        const ChartPoint z = projective_to_chart(p);
        const CVector vz = fm.chart(z);
        const double s = 1.0 / std::sqrt(chart_jacobian(z, d));
        double overlap = std::abs(inner(vz, hp)) * s;
        CHECK(pt::relative_error(overlap, params.diagonal()) < 1e-10);
      }
    }
  }
}

TEST_CASE("log-polar features agree with the direct form") {
  std::mt19937_64 rng(31);
  for (int d : {1, 2, 3}) {
    const KernelParams params(d, 50);
    const FeatureMap fm(params);
    for (int trial = 0; trial < 5; ++trial) {
      const ChartPoint z{pt::random_complex(d, rng, 0.8)};
      const CVector direct = fm.chart(z, FeatureMap::Form::direct);
      const CVector logp = fm.chart(z, FeatureMap::Form::log_polar);
      const double scale = std::sqrt(norm_squared(direct));
      for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(std::abs(direct[i] - logp[i]) <= 1e-8 * std::max(std::abs(direct[i]), 1e-300) + 1e-14 * scale);
      }
      const ProjectivePoint x(pt::random_complex(d + 1, rng));
      const CVector hd = fm.projective(x, FeatureMap::Form::direct);
      const CVector hl = fm.projective(x, FeatureMap::Form::log_polar);
      for (std::size_t i = 0; i < hd.size(); ++i) {
        CHECK(std::abs(hd[i] - hl[i]) <= 1e-8 * std::abs(hd[i]) + 1e-14 * std::sqrt(params.diagonal()));
      }
    }
  }
}

TEST_CASE("large degree uses the log form and stays finite") {
  const KernelParams params(2, 250);
  const FeatureMap fm(params);
  std::mt19937_64 rng(37);
  const ProjectivePoint x(pt::random_complex(3, rng));
  const CVector h = fm.projective(x);
  for (const cplx& c : h) CHECK(std::isfinite(std::abs(c)));
  CHECK(pt::relative_error(norm_squared(h), params.diagonal()) < 1e-9);

  const ChartPoint z{pt::random_complex(2, rng, 3.0)};
  const CVector v = fm.chart(z);
  CHECK(pt::relative_error(norm_squared(v), kernel_eval(z, z, params).real()) < 1e-9);
}

TEST_CASE("joint_intensity_2") {
  const KernelParams params(2, 3);
  const double diag = params.diagonal();
  const ProjectivePoint e1({1.0, 0.0, 0.0});
  const ProjectivePoint e3({0.0, 0.0, 1.0});
  CHECK(joint_intensity_2(e1, e1, params) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(joint_intensity_2(e1, e3, params) == doctest::Approx(diag * diag).epsilon(1e-14));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const ProjectivePoint p(pt::random_complex(3, rng));
    const ProjectivePoint q(pt::random_complex(3, rng));
    const double j = joint_intensity_2(p, q, params);
    CHECK(j >= 0.0);
    CHECK(j <= diag * diag * (1.0 + 1e-15));
  }
}
