#include "pensemble/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pensemble/closed_forms.hpp"
#include "pensemble/errors.hpp"
#include "pensemble/io.hpp"
#include "pensemble/montecarlo.hpp"

namespace pensemble {

namespace {

constexpr int kExitFailedValidation = 1;
constexpr int kExitUsage = 2;

// Degree L with binomial(d+L, d) == r, if any.
std::optional<int> infer_degree(int d, std::uint64_t r) {
  for (int L = 0; L < 1'000'000; ++L) {
    const std::uint64_t rank = KernelParams(d, L).r();
    if (rank == r) return L;
    if (rank > r) break;
  }
  return std::nullopt;
}

std::optional<double> expected_for(const PointSetFile& file, EnergyKind kind, double s) {
  std::optional<int> L;
  int k = 0;
  if (file.space == "CP") {
    L = file.L;
  } else {
    k = file.k.value_or(0);
    if (k >= 1 && file.points.size() % static_cast<std::size_t>(k) == 0) {
      L = infer_degree(file.d, file.points.size() / static_cast<std::size_t>(k));
    }
  }
  if (!L) return std::nullopt;
  const bool sphere = file.space == "S";
  if (sphere != (kind == EnergyKind::riesz || kind == EnergyKind::log)) return std::nullopt;
  return closed_form_for({kind, s}, file.d, *L, k);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective ensemble sampler, energies and closed-form expectations", "pensemble"};
  app.require_subcommand(1);

  int d = 1;
  int L = 1;
  int k = 0;
  double s = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned threads = 0;
  double z_max = 4.0;
  int d_max = 1;
  std::string in_path;
  std::string out_path;
  std::string kind_name;
  std::string which;

  auto* sample = app.add_subcommand("sample", "Draw one projective ensemble sample");
  sample->add_option("--d", d, "Complex dimension d >= 1")->required()->check(CLI::PositiveNumber);
  sample->add_option("--L", L, "Degree L >= 0")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "Seed")->required()->envname("PENSEMBLE_SEED");
  sample->add_option("--out", out_path, "Output point-set JSON (default: stdout)");

  auto* lift = app.add_subcommand("lift", "Lift a projective sample to S^{2d+1}");
  lift->add_option("--k", k, "Points per fiber k >= 1")->required()->check(CLI::PositiveNumber);
  lift->add_option("--seed", seed, "Seed for the fiber phases")->required()->envname("PENSEMBLE_SEED");
  lift->add_option("--in", in_path, "Projective point-set JSON")->required();
  lift->add_option("--out", out_path, "Output sphere point-set JSON")->required();

  auto* energy = app.add_subcommand("energy", "Evaluate a discrete energy of a point set");
  energy->add_option("--kind", kind_name, "riesz|log|projective|projective-log|green")
      ->required()
      ->check(CLI::IsMember({"riesz", "log", "projective", "projective-log", "green"}));
  auto* energy_s = energy->add_option("--s", s, "Riesz exponent");
  energy->add_option("--in", in_path, "Point-set JSON")->required();

  auto* expected = app.add_subcommand("expected", "Exact expected energy and asymptotics");
  expected->add_option("--which", which, "projective|projective-log|sphere2|green")
      ->required()
      ->check(CLI::IsMember({"projective", "projective-log", "sphere2", "green"}));
  expected->add_option("--d", d, "Complex dimension")->required();
  expected->add_option("--L", L, "Degree")->required();
  auto* expected_s = expected->add_option("--s", s, "Riesz exponent (projective)");
  auto* expected_k = expected->add_option("--k", k, "Points per fiber (sphere2)");

  auto* constants = app.add_subcommand("constants", "Second-order bound constants");
  constants->add_option("--d", d, "Dimension parameter d >= 1")->required();

  auto* validate = app.add_subcommand("validate", "Monte Carlo validation against closed forms");
  validate->add_option("--d", d, "Complex dimension")->required();
  validate->add_option("--L", L, "Degree")->required();
  validate->add_option("--k", k, "Points per fiber (0: projective only)");
  validate->add_option("--trials", trials, "Number of trials >= 2")->required();
  validate->add_option("--seed", seed, "Master seed")->required()->envname("PENSEMBLE_SEED");
  validate->add_option("--threads", threads, "Worker threads (default: all cores)");
  validate->add_option("--z-max", z_max, "Acceptance threshold on |z|")->check(CLI::PositiveNumber);

  auto* figure1 = app.add_subcommand("figure1", "Bound constants for d = 1..d_max as CSV");
  figure1->add_option("--d-max", d_max, "Largest d")->required();
  figure1->add_option("--out", out_path, "Output CSV (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*sample) {
      SamplerConfig cfg{KernelParams(d, L), seed};
      const PointSetFile f = to_point_set(sample_projective_ensemble(cfg));
      write_text(dump_json(to_json(f)) + "\n", out_path, out);
    } else if (*lift) {
      const PointSetFile in = read_point_set(in_path);
      if (in.space != "CP") throw DomainError("lift: input must be a CP point set");
      Rng rng = make_rng(seed);
      ProjectiveSample src{projective_points(in), KernelParams(in.d, in.L.value_or(0)), in.seed};
      SphereConfiguration conf = lift_to_sphere(src, k, rng);
      write_point_set(to_point_set(conf, seed), out_path);
    } else if (*energy) {
      const PointSetFile f = read_point_set(in_path);
      const EnergyKind kind = parse_energy_kind(kind_name);
      const bool needs_s = kind == EnergyKind::riesz || kind == EnergyKind::projective_riesz;
      if (needs_s && energy_s->count() == 0) throw DomainError("energy: --s is required for this kind");
      if (f.points.empty()) throw DomainError("energy: point set is empty");
      EnergyReport rep;
      switch (kind) {
        case EnergyKind::riesz: rep = riesz_energy(realify(projective_points(f)), s); break;
        case EnergyKind::log: rep = log_energy(realify(projective_points(f))); break;
        case EnergyKind::projective_riesz: rep = projective_riesz_energy(projective_points(f), s); break;
        case EnergyKind::projective_log: rep = projective_log_energy(projective_points(f)); break;
        case EnergyKind::green: rep = green_energy(projective_points(f), f.d); break;
      }
      rep.expected = expected_for(f, kind, needs_s ? s : 0.0);
      out << dump_json(to_json(rep)) << '\n';
    } else if (*expected) {
      ExpectedEnergy e;
      if (which == "projective") {
        if (expected_s->count() == 0) throw DomainError("expected: --s is required for projective");
        e = expected_projective_riesz(d, L, s);
      } else if (which == "projective-log") {
        e = expected_projective_log(d, L);
      } else if (which == "sphere2") {
        if (expected_k->count() == 0) throw DomainError("expected: --k is required for sphere2");
        e = expected_sphere_2energy_exact(d, L, k);
      } else {
        e = expected_green_energy(d, L);
      }
      out << dump_json(to_json(e)) << '\n';
    } else if (*constants) {
      out << dump_json(to_json(bound_constants(d))) << '\n';
    } else if (*validate) {
      ExperimentConfig cfg;
      cfg.d = d;
      cfg.L = L;
      cfg.k = k;
      cfg.trials = trials;
      cfg.master_seed = seed;
      cfg.threads = threads;
      const ExperimentReport rep = run_experiment(cfg);
      out << dump_json(to_json(rep)) << '\n';
      err << "validate: " << rep.trials_retained << " trials retained in " << rep.wall_time_seconds
          << " s\n";
      return rep.passes(z_max) ? 0 : kExitFailedValidation;
    } else if (*figure1) {
      std::ostringstream csv;
      write_figure1_csv(emit_figure1_data(d_max), csv);
      write_text(csv.str(), out_path, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}

}  // namespace pensemble
