#include "pensemble/kernel.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "pensemble/errors.hpp"

namespace pensemble {

namespace {

void check_dims(int d, int L) {
  if (d < 1) throw DomainError("kernel: d must be >= 1");
  if (L < 0) throw DomainError("kernel: L must be >= 0");
}

// All alpha of total degree `degree` over `vars` variables, lexicographically
// descending.
void append_degree(int vars, int degree, MultiIndex& prefix, std::vector<MultiIndex>& out) {
  if (vars == 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = degree; a >= 0; --a) {
    prefix.push_back(a);
    append_degree(vars - 1, degree - a, prefix, out);
    prefix.pop_back();
  }
}

double log_diagonal(int d, int L) {
  // r d! / pi^d = (d+L)! / (L! pi^d)
  return std::lgamma(d + L + 1.0) - std::lgamma(L + 1.0) - d * std::log(std::numbers::pi);
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; divide by the gcd first.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t a = result / g;
    const std::uint64_t b = i / g;
    const std::uint64_t c = num / b;  // b divides num after removing g
    if (a != 0 && c > std::numeric_limits<std::uint64_t>::max() / a) {
      throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") overflows 64 bits");
    }
    result = a * c;
  }
  return result;
}

KernelParams::KernelParams(int d, int L) : d_(d), L_(L) {
  check_dims(d, L);
  r_ = binomial(static_cast<std::uint64_t>(d + L), static_cast<std::uint64_t>(d));
  diagonal_ = std::exp(log_diagonal(d, L));
}

std::vector<MultiIndex> enumerate_multi_indices(int d, int L) {
  check_dims(d, L);
  std::vector<MultiIndex> out;
  MultiIndex prefix;
  for (int degree = 0; degree <= L; ++degree) append_degree(d, degree, prefix, out);
  return out;
}

double log_basis_coefficient(const MultiIndex& alpha, const KernelParams& params) {
  if (alpha.size() != static_cast<std::size_t>(params.d())) {
    throw DomainError("basis_coefficient: multi-index length must equal d");
  }
  int total = 0;
  double acc = std::lgamma(params.d() + params.L() + 1.0) -
               params.d() * std::log(std::numbers::pi);
  for (int a : alpha) {
    if (a < 0) throw DomainError("basis_coefficient: negative multi-index entry");
    total += a;
    acc -= std::lgamma(a + 1.0);
  }
  if (total > params.L()) throw DomainError("basis_coefficient: |alpha| exceeds L");
  return acc - std::lgamma(params.L() - total + 1.0);
}

double basis_coefficient(const MultiIndex& alpha, const KernelParams& params) {
  return std::exp(log_basis_coefficient(alpha, params));
}

FeatureMap::FeatureMap(KernelParams params)
    : params_(params), indices_(enumerate_multi_indices(params.d(), params.L())) {
  const std::size_t r = indices_.size();
  std::map<MultiIndex, std::size_t> position;
  for (std::size_t i = 0; i < r; ++i) position.emplace(indices_[i], i);

  degree_.resize(r);
  parent_.assign(r, 0);
  var_.assign(r, -1);
  sqrt_coeff_.resize(r);
  log_coeff_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const MultiIndex& alpha = indices_[i];
    degree_[i] = std::accumulate(alpha.begin(), alpha.end(), 0);
    for (int j = 0; j < params_.d(); ++j) {
      if (alpha[j] > 0) {
        MultiIndex lower = alpha;
        --lower[j];
        parent_[i] = position.at(lower);
        var_[i] = j;
        break;
      }
    }
    log_coeff_[i] = log_basis_coefficient(alpha, params_);
    sqrt_coeff_[i] = std::exp(0.5 * log_coeff_[i]);
  }
}

bool FeatureMap::use_log(Form form) const {
  if (form == Form::automatic) return params_.L() >= kLogFormThreshold;
  return form == Form::log_polar;
}

CVector FeatureMap::chart(const ChartPoint& z, Form form) const {
  const int d = params_.d();
  if (z.dim() != static_cast<std::size_t>(d)) {
    throw DomainError("feature_vector: chart point dimension must equal d");
  }
  const std::size_t r = indices_.size();
  const double half_power = 0.5 * (d + params_.L() + 1);
  const double log_weight = -half_power * std::log1p(z.norm_squared());
  CVector v(r);

  if (!use_log(form)) {
    const double weight = std::exp(log_weight);
    CVector mono(r);
    mono[0] = 1.0;
    for (std::size_t i = 1; i < r; ++i) mono[i] = mono[parent_[i]] * z.z[var_[i]];
    for (std::size_t i = 0; i < r; ++i) v[i] = sqrt_coeff_[i] * weight * mono[i];
    return v;
  }

  std::vector<double> log_abs(d);
  std::vector<double> arg(d);
  for (int j = 0; j < d; ++j) {
    log_abs[j] = std::log(std::abs(z.z[j]));
    arg[j] = std::arg(z.z[j]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    double lm = 0.5 * log_coeff_[i] + log_weight;
    double ph = 0.0;
    for (int j = 0; j < d; ++j) {
      const int a = indices_[i][j];
      if (a == 0) continue;
      lm += a * log_abs[j];
      ph += a * arg[j];
    }
    v[i] = std::polar(std::exp(lm), ph);
  }
  return v;
}

CVector FeatureMap::projective(const ProjectivePoint& x, Form form) const {
  const int d = params_.d();
  const int L = params_.L();
  if (x.dim() != static_cast<std::size_t>(d)) {
    throw DomainError("projective feature: point dimension must equal d");
  }
  const std::size_t r = indices_.size();
  CVector v(r);

  if (!use_log(form)) {
    CVector x0pow(L + 1);
    x0pow[0] = 1.0;
    for (int e = 1; e <= L; ++e) x0pow[e] = x0pow[e - 1] * x[0];
    CVector mono(r);
    mono[0] = 1.0;
    for (std::size_t i = 1; i < r; ++i) mono[i] = mono[parent_[i]] * x[var_[i] + 1];
    for (std::size_t i = 0; i < r; ++i) v[i] = sqrt_coeff_[i] * x0pow[L - degree_[i]] * mono[i];
    return v;
  }

  std::vector<double> log_abs(d + 1);
  std::vector<double> arg(d + 1);
  for (int j = 0; j <= d; ++j) {
    log_abs[j] = std::log(std::abs(x[j]));
    arg[j] = std::arg(x[j]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    double lm = 0.5 * log_coeff_[i];
    double ph = 0.0;
    const int a0 = L - degree_[i];
    if (a0 > 0) {
      lm += a0 * log_abs[0];
      ph += a0 * arg[0];
    }
    for (int j = 0; j < d; ++j) {
      const int a = indices_[i][j];
      if (a == 0) continue;
      lm += a * log_abs[j + 1];
      ph += a * arg[j + 1];
    }
    v[i] = std::polar(std::exp(lm), ph);
  }
  return v;
}

CVector feature_vector(const ChartPoint& z, const KernelParams& params) {
  return FeatureMap(params).chart(z);
}

cplx kernel_eval(const ChartPoint& z, const ChartPoint& w, const KernelParams& params) {
  const int d = params.d();
  const int L = params.L();
  if (z.dim() != static_cast<std::size_t>(d) || w.dim() != static_cast<std::size_t>(d)) {
    throw DomainError("kernel_eval: chart point dimension must equal d");
  }
  const cplx base = 1.0 + inner(z.z, w.z);
  double log_mag = log_diagonal(d, L) -
                   0.5 * (d + L + 1) * (std::log1p(z.norm_squared()) + std::log1p(w.norm_squared()));
  double phase = 0.0;
  if (L > 0) {
    if (base == cplx{0.0, 0.0}) return {0.0, 0.0};
    log_mag += L * std::log(std::abs(base));
    phase = L * std::arg(base);
  }
  return std::polar(std::exp(log_mag), phase);
}

double projective_kernel_magnitude(const ProjectivePoint& p, const ProjectivePoint& q,
                                   const KernelParams& params) {
  if (p.dim() != q.dim() || p.dim() != static_cast<std::size_t>(params.d())) {
    throw DomainError("projective_kernel_magnitude: dimension mismatch");
  }
  const double c = std::min(1.0, std::abs(inner(p.coords(), q.coords())));
  return params.diagonal() * std::pow(c, params.L());
}

double joint_intensity_2(const ProjectivePoint& p, const ProjectivePoint& q,
                         const KernelParams& params) {
  const double diag = params.diagonal();
  const double off = projective_kernel_magnitude(p, q, params);
  return std::max(0.0, diag * diag - off * off);
}

}  // namespace pensemble
