#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pensemble/closed_forms.hpp"
#include "pensemble/energy.hpp"
#include "pensemble/montecarlo.hpp"
#include "pensemble/sampler.hpp"
#include "pensemble/sphere_lift.hpp"

namespace pensemble {

/// "%.17g": enough digits for a lossless double round trip.
std::string format_double(double x);

/// JSON text with every floating-point number printed by format_double.
/// Non-finite numbers are written as null.
std::string dump_json(const nlohmann::json& j, int indent = 2);

/// On-disk point set. Complex coordinates are [re, im] pairs.
struct PointSetFile {
  std::string space;  // "CP" or "S"
  int d = 0;
  std::optional<int> L;  // CP only
  std::optional<int> k;  // S only
  std::uint64_t seed = 0;
  std::vector<CVector> points;
};

PointSetFile to_point_set(const ProjectiveSample& sample);
PointSetFile to_point_set(const SphereConfiguration& config, std::uint64_t seed);
std::vector<ProjectivePoint> projective_points(const PointSetFile& file);

nlohmann::json to_json(const PointSetFile& file);
PointSetFile point_set_from_json(const nlohmann::json& j);
PointSetFile read_point_set(const std::string& path);
void write_point_set(const PointSetFile& file, const std::string& path);

nlohmann::json to_json(const EnergyReport& report);
nlohmann::json to_json(const ExpectedEnergy& expected);
nlohmann::json to_json(const BoundConstants& constants);
nlohmann::json to_json(const ExperimentReport& report);

void write_figure1_csv(const std::vector<Figure1Row>& rows, std::ostream& out);

}  // namespace pensemble
