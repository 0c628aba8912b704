#include "pensemble/projective_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pensemble/errors.hpp"

namespace pensemble {

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) {
    throw DomainError("inner: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

double norm_squared(std::span<const cplx> a) {
  double acc = 0.0;
  for (const cplx& x : a) acc += std::norm(x);
  return acc;
}

ProjectivePoint::ProjectivePoint(CVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw DomainError("ProjectivePoint: need at least 2 homogeneous coordinates (d >= 1)");
  }
  const double n = std::sqrt(norm_squared(coords_));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("ProjectivePoint: representative must be finite and nonzero");
  }
  for (cplx& x : coords_) x /= n;
}

ProjectivePoint ProjectivePoint::rotated(double phase) const {
  const cplx w = std::polar(1.0, phase);
  CVector c = coords_;
  for (cplx& x : c) x *= w;
  return ProjectivePoint(std::move(c));
}

double ChartPoint::norm_squared() const { return pensemble::norm_squared(z); }

double fubini_sin_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dim() != q.dim()) throw DomainError("fubini_sin_distance: dimension mismatch");
  const double c = std::min(1.0, std::abs(inner(p.coords(), q.coords())));
  return std::sqrt((1.0 - c) * (1.0 + c));
}

bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
  if (p.dim() != q.dim()) return false;
  return 1.0 - std::abs(inner(p.coords(), q.coords())) <= tol;
}

ProjectivePoint chart_to_projective(const ChartPoint& z) {
  CVector c;
  c.reserve(z.z.size() + 1);
  c.emplace_back(1.0, 0.0);
  for (const cplx& x : z.z) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw DomainError("chart_to_projective: chart coordinates must be finite");
    }
    c.push_back(x);
  }
  return ProjectivePoint(std::move(c));
}

ChartPoint projective_to_chart(const ProjectivePoint& p) {
  const cplx x0 = p[0];
  if (std::abs(x0) < kChartBoundaryTolerance) {
    throw PointAtInfinity("projective_to_chart: first coordinate vanishes (point at infinity)");
  }
  ChartPoint out;
  out.z.reserve(p.dim());
  for (std::size_t i = 1; i <= p.dim(); ++i) out.z.push_back(p[i] / x0);
  return out;
}

double chart_jacobian_radial(double norm_squared, int d) {
  return std::pow(1.0 + norm_squared, -(d + 1));
}

double chart_jacobian(const ChartPoint& z, int d) {
  if (d < 1 || static_cast<std::size_t>(d) != z.dim()) {
    throw DomainError("chart_jacobian: d must equal the chart dimension");
  }
  return chart_jacobian_radial(z.norm_squared(), d);
}

double projective_volume(int d) {
  return std::exp(d * std::log(std::numbers::pi) - std::lgamma(d + 1.0));
}

}  // namespace pensemble
