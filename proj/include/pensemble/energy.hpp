#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pensemble/projective_geometry.hpp"

namespace pensemble {

enum class EnergyKind { riesz, log, projective_riesz, projective_log, green };

std::string_view to_string(EnergyKind kind);
/// Accepts the CLI spellings: riesz, log, projective, projective-log, green.
EnergyKind parse_energy_kind(std::string_view name);

/// Value of a discrete energy. When two points coincide (distance below
/// kCoincidenceFloor) the value is +infinity and `infinite` is set.
struct EnergyReport {
  EnergyKind kind = EnergyKind::riesz;
  double s = 0.0;
  double value = 0.0;
  std::size_t n_points = 0;
  bool infinite = false;
  std::optional<double> expected;
};

inline constexpr double kCoincidenceFloor = 1e-15;

using RealPoints = std::vector<std::vector<double>>;

/// Sum over ordered pairs i != j of |x_i - x_j|^{-s}.
EnergyReport riesz_energy(const RealPoints& points, double s);

/// Sum over ordered pairs of log |x_i - x_j|^{-1}.
EnergyReport log_energy(const RealPoints& points);

/// Sum over ordered pairs of sin(d_FS(x_i, x_j))^{-s}, 0 < s < 2d.
EnergyReport projective_riesz_energy(std::span<const ProjectivePoint> points, double s);

/// Sum over ordered pairs of log 1/sin(d_FS(x_i, x_j)).
EnergyReport projective_log_energy(std::span<const ProjectivePoint> points);

/// Additive constant making the Green function of CP^d zero-mean:
/// -((d-1)!/(4 pi^d)) (1/d + 2 sum_{k<d} 1/k).
double green_constant(int d);

/// Green function of CP^d (d >= 2) as a function of sin r, r the
/// Fubini-Study distance. +infinity at sin r = 0.
double green_of_sin_distance(int d, double sin_r);

double green_function(int d, const ProjectivePoint& p, const ProjectivePoint& q);

EnergyReport green_energy(std::span<const ProjectivePoint> points, int d);

}  // namespace pensemble
