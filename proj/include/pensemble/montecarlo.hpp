#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pensemble/energy.hpp"

namespace pensemble {

enum class Estimator { mean, median_of_means };

/// One energy tracked per trial. Euclidean kinds (riesz, log) are evaluated on
/// the lifted sphere configuration, so they require k >= 1.
struct EnergySpec {
  EnergyKind kind = EnergyKind::projective_riesz;
  double s = 0.0;

  friend bool operator==(const EnergySpec&, const EnergySpec&) = default;
};

struct ExperimentConfig {
  int d = 1;
  int L = 1;
  int k = 0;  // 0: projective energies only
  std::vector<EnergySpec> energies;  // empty: default_energies(d, k)
  std::uint64_t trials = 2;
  std::uint64_t master_seed = 0;
  std::optional<Estimator> estimator;  // empty: chosen per energy
  int mom_blocks = 20;
  unsigned threads = 1;  // 0: hardware concurrency
};

/// Projective s = d, projective log, Green (d >= 2); with k >= 1 also the
/// Riesz 2-energy of the lifted configuration.
std::vector<EnergySpec> default_energies(int d, int k);

/// Median-of-means for projective Riesz energies with s > d, mean otherwise.
Estimator default_estimator(const EnergySpec& spec, int d);

/// Exact expectation for the spec, when a closed form exists.
std::optional<double> closed_form_for(const EnergySpec& spec, int d, int L, int k);

struct EnergyStatistics {
  EnergySpec spec;
  Estimator estimator = Estimator::mean;
  double sample_mean = 0.0;
  double sample_std = 0.0;
  /// Estimator output; equals sample_mean for Estimator::mean.
  double estimate = 0.0;
  double standard_error = 0.0;
  std::optional<double> closed_form_exact;
  /// (estimate - closed_form_exact) / standard_error.
  std::optional<double> z_score;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<EnergyStatistics> energies;
  std::uint64_t trials_retained = 0;
  std::uint64_t trials_discarded = 0;
  double wall_time_seconds = 0.0;

  /// True iff every defined z-score satisfies |z| <= z_max.
  bool passes(double z_max = 4.0) const;
};

/// Runs config.trials independent trials. Trial t uses
/// derive_trial_rng(master_seed, t): ensemble first, then lift phases. Trials
/// with a coincidence flag are discarded; the rest are folded in trial order,
/// so the report does not depend on the thread count.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct Figure1Row {
  int d = 0;
  double projective_bound = 0.0;
  double harmonic_bound = 0.0;
};

std::vector<Figure1Row> emit_figure1_data(int d_max);

}  // namespace pensemble
