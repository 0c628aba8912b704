#include "pensemble/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pensemble/errors.hpp"

namespace pensemble {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DomainError("energy: points have different dimensions");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    acc += t * t;
  }
  return std::sqrt(acc);
}

// Sums term(distance) over unordered pairs and doubles, i.e. the ordered-pair
// sum. Any distance below the floor flags the result infinite.
template <typename Points, typename Distance, typename Term>
EnergyReport pair_sum(EnergyKind kind, double s, const Points& points, Distance distance,
                      Term term) {
  EnergyReport out;
  out.kind = kind;
  out.s = s;
  out.n_points = points.size();
  CompensatedSum acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dist = distance(points[i], points[j]);
      if (dist < kCoincidenceFloor) {
        out.infinite = true;
        out.value = kInf;
        return out;
      }
      acc.add(term(dist));
    }
  }
  out.value = 2.0 * acc.value();
  return out;
}

void require_points(std::size_t n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": need at least one point");
}

void require_same_dim(std::span<const ProjectivePoint> points, const char* who) {
  for (const ProjectivePoint& p : points) {
    if (p.dim() != points.front().dim()) {
      throw DomainError(std::string(who) + ": points have different dimensions");
    }
  }
}

}  // namespace

std::string_view to_string(EnergyKind kind) {
  switch (kind) {
    case EnergyKind::riesz: return "riesz";
    case EnergyKind::log: return "log";
    case EnergyKind::projective_riesz: return "projective_riesz";
    case EnergyKind::projective_log: return "projective_log";
    case EnergyKind::green: return "green";
  }
  return "unknown";
}

EnergyKind parse_energy_kind(std::string_view name) {
  if (name == "riesz") return EnergyKind::riesz;
  if (name == "log") return EnergyKind::log;
  if (name == "projective" || name == "projective_riesz") return EnergyKind::projective_riesz;
  if (name == "projective-log" || name == "projective_log") return EnergyKind::projective_log;
  if (name == "green") return EnergyKind::green;
  throw DomainError("unknown energy kind '" + std::string(name) + "'");
}

EnergyReport riesz_energy(const RealPoints& points, double s) {
  require_points(points.size(), "riesz_energy");
  if (!(s > 0.0)) throw DomainError("riesz_energy: s must be > 0");
  return pair_sum(EnergyKind::riesz, s, points, euclidean_distance,
                  [s](double r) { return std::pow(r, -s); });
}

EnergyReport log_energy(const RealPoints& points) {
  require_points(points.size(), "log_energy");
  return pair_sum(EnergyKind::log, 0.0, points, euclidean_distance,
                  [](double r) { return -std::log(r); });
}

EnergyReport projective_riesz_energy(std::span<const ProjectivePoint> points, double s) {
  require_points(points.size(), "projective_riesz_energy");
  require_same_dim(points, "projective_riesz_energy");
  const double d = static_cast<double>(points.front().dim());
  if (!(s > 0.0 && s < 2.0 * d)) {
    throw DomainError("projective_riesz_energy: s must lie in (0, 2d) = (0, " +
                      std::to_string(2.0 * d) + ")");
  }
  return pair_sum(EnergyKind::projective_riesz, s, points, fubini_sin_distance,
                  [s](double sn) { return std::pow(sn, -s); });
}

EnergyReport projective_log_energy(std::span<const ProjectivePoint> points) {
  require_points(points.size(), "projective_log_energy");
  require_same_dim(points, "projective_log_energy");
  return pair_sum(EnergyKind::projective_log, 0.0, points, fubini_sin_distance,
                  [](double sn) { return -std::log(sn); });
}

double green_constant(int d) {
  if (d < 2) throw DomainError("green function: d must be >= 2");
  double harmonic = 0.0;
  for (int k = 1; k < d; ++k) harmonic += 1.0 / k;
  const double scale = std::exp(std::lgamma(d) - d * std::log(std::numbers::pi)) / 4.0;
  return -scale * (1.0 / d + 2.0 * harmonic);
}

double green_of_sin_distance(int d, double sin_r) {
  const double c = green_constant(d);
  if (!(sin_r >= kCoincidenceFloor)) return kInf;
  const double scale = std::exp(std::lgamma(d) - d * std::log(std::numbers::pi)) / 2.0;
  double bracket = -std::log(sin_r);
  const double sin2 = sin_r * sin_r;
  for (int k = 1; k < d; ++k) bracket += 0.5 / ((d - k) * std::pow(sin2, d - k));
  return scale * bracket + c;
}

double green_function(int d, const ProjectivePoint& p, const ProjectivePoint& q) {
  if (d < 2) throw DomainError("green function: d must be >= 2");
  if (p.dim() != static_cast<std::size_t>(d) || q.dim() != static_cast<std::size_t>(d)) {
    throw DomainError("green function: points must lie in CP^d");
  }
  return green_of_sin_distance(d, fubini_sin_distance(p, q));
}

EnergyReport green_energy(std::span<const ProjectivePoint> points, int d) {
  if (d < 2) throw DomainError("green_energy: d must be >= 2");
  require_points(points.size(), "green_energy");
  for (const ProjectivePoint& p : points) {
    if (p.dim() != static_cast<std::size_t>(d)) {
      throw DomainError("green_energy: points must lie in CP^d");
    }
  }
  EnergyReport out =
      pair_sum(EnergyKind::green, 0.0, points, fubini_sin_distance,
               [d](double sn) { return green_of_sin_distance(d, sn); });
  return out;
}

}  // namespace pensemble
