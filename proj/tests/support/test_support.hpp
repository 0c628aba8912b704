#pragma once

// Test-only helpers: random inputs, unitary matrices and Kolmogorov-Smirnov
// statistics. Nothing here calls into the code paths under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace pensemble::testing {

using cplx = std::complex<double>;
using CMatrix = std::vector<std::vector<cplx>>;  // row-major

inline std::vector<cplx> random_complex(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = {g(rng), g(rng)};
  return v;
}

/// Haar-ish random unitary from Gram-Schmidt on Gaussian columns.
inline CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<cplx>> cols;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<cplx> v = random_complex(n, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : cols) {
        cplx dot{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
    }
    double nn = 0.0;
    for (const cplx& x : v) nn += std::norm(x);
    for (cplx& x : v) x /= std::sqrt(nn);
    cols.push_back(v);
  }
  CMatrix m(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
  return m;
}

inline std::vector<cplx> apply(const CMatrix& m, const std::vector<cplx>& v) {
  std::vector<cplx> out(v.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Survival function of the Kolmogorov distribution, Q(lambda).
inline double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

/// Asymptotic p-value with the Stephens small-sample correction.
inline double ks_pvalue(double statistic, double effective_n) {
  const double sn = std::sqrt(effective_n);
  return kolmogorov_q((sn + 0.12 + 0.11 / sn) * statistic);
}

inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

inline double ks_one_sample_pvalue(const std::vector<double>& xs,
                                   const std::function<double(double)>& cdf) {
  return ks_pvalue(ks_statistic(xs, cdf), static_cast<double>(xs.size()));
}

inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return ks_pvalue(d, na * nb / (na + nb));
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace pensemble::testing
