#include "pensemble/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pensemble/errors.hpp"

namespace pensemble {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void emit(const json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const json& e : j) flat = flat && !e.is_structured();
      out += '[';
      bool first = true;
      for (const json& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        emit(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

json complex_vector_json(const CVector& v) {
  json a = json::array();
  for (const cplx& c : v) a.push_back(json::array({c.real(), c.imag()}));
  return a;
}

json optional_number(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

PointSetFile to_point_set(const ProjectiveSample& sample) {
  PointSetFile f;
  f.space = "CP";
  f.d = sample.params.d();
  f.L = sample.params.L();
  f.seed = sample.seed;
  for (const ProjectivePoint& p : sample.points) f.points.emplace_back(p.coords().begin(), p.coords().end());
  return f;
}

PointSetFile to_point_set(const SphereConfiguration& config, std::uint64_t seed) {
  PointSetFile f;
  f.space = "S";
  f.d = config.d;
  f.k = config.k;
  f.seed = seed;
  f.points = config.points;
  return f;
}

std::vector<ProjectivePoint> projective_points(const PointSetFile& file) {
  std::vector<ProjectivePoint> out;
  out.reserve(file.points.size());
  for (const CVector& v : file.points) out.emplace_back(v);
  return out;
}

json to_json(const PointSetFile& file) {
  json j;
  j["space"] = file.space;
  j["d"] = file.d;
  if (file.L) j["L"] = *file.L;
  if (file.k) j["k"] = *file.k;
  j["seed"] = file.seed;
  json pts = json::array();
  for (const CVector& p : file.points) pts.push_back(complex_vector_json(p));
  j["points"] = std::move(pts);
  return j;
}

PointSetFile point_set_from_json(const json& j) {
  try {
    PointSetFile f;
    f.space = j.at("space").get<std::string>();
    if (f.space != "CP" && f.space != "S") {
      throw DomainError("point set: space must be \"CP\" or \"S\"");
    }
    f.d = j.at("d").get<int>();
    if (f.d < 1) throw DomainError("point set: d must be >= 1");
    if (j.contains("L")) f.L = j.at("L").get<int>();
    if (j.contains("k")) f.k = j.at("k").get<int>();
    f.seed = j.value("seed", std::uint64_t{0});
    for (const json& p : j.at("points")) {
      CVector v;
      for (const json& c : p) v.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
      if (v.size() != static_cast<std::size_t>(f.d + 1)) {
        throw DomainError("point set: every point needs d+1 complex coordinates");
      }
      f.points.push_back(std::move(v));
    }
    return f;
  } catch (const json::exception& e) {
    throw DomainError(std::string("point set: malformed JSON: ") + e.what());
  }
}

PointSetFile read_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("'" + path + "': " + e.what());
  }
  return point_set_from_json(j);
}

void write_point_set(const PointSetFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << dump_json(to_json(file)) << '\n';
}

json to_json(const EnergyReport& report) {
  json j;
  j["kind"] = std::string(to_string(report.kind));
  j["s"] = report.s;
  j["value"] = report.infinite ? json(nullptr) : json(report.value);
  j["infinite"] = report.infinite;
  j["n_points"] = report.n_points;
  j["expected"] = optional_number(report.expected);
  return j;
}

json to_json(const ExpectedEnergy& e) {
  json j;
  j["exact"] = e.exact;
  j["r"] = e.r;
  j["leading_term"] = e.leading_term;
  j["fiber_term"] = e.fiber_term;
  j["second_order_coefficient"] = e.second_order_coefficient;
  j["second_order_prefactor"] = e.second_order_prefactor;
  j["second_order_exponent"] = e.second_order_exponent;
  j["second_order_log"] = e.second_order_log;
  j["asymptotic_estimate"] = e.asymptotic_estimate();
  return j;
}

json to_json(const BoundConstants& b) {
  json j;
  j["d"] = b.d;
  j["A_opt"] = b.A_opt;
  j["f_at_A_opt"] = b.f_at_A_opt;
  j["projective_bound"] = b.projective_bound;
  j["harmonic_bound"] = b.harmonic_bound;
  return j;
}

json to_json(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  json j;
  j["d"] = c.d;
  j["L"] = c.L;
  j["k"] = c.k;
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
  j["trials_retained"] = report.trials_retained;
  j["trials_discarded"] = report.trials_discarded;
  json arr = json::array();
  for (const EnergyStatistics& e : report.energies) {
    json x;
    x["kind"] = std::string(to_string(e.spec.kind));
    x["s"] = e.spec.s;
    x["estimator"] = e.estimator == Estimator::mean ? "mean" : "median_of_means";
    x["sample_mean"] = e.sample_mean;
    x["sample_std"] = e.sample_std;
    x["estimate"] = e.estimate;
    x["standard_error"] = e.standard_error;
    x["closed_form_exact"] = optional_number(e.closed_form_exact);
    x["z_score"] = optional_number(e.z_score);
    arr.push_back(std::move(x));
  }
  j["energies"] = std::move(arr);
  return j;
}

void write_figure1_csv(const std::vector<Figure1Row>& rows, std::ostream& out) {
  out << "d,projective_bound,harmonic_bound\n";
  for (const Figure1Row& r : rows) {
    out << r.d << ',' << format_double(r.projective_bound) << ',' << format_double(r.harmonic_bound)
        << '\n';
  }
}

}  // namespace pensemble
