#include "pensemble/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "pensemble/closed_forms.hpp"
#include "pensemble/errors.hpp"
#include "pensemble/sampler.hpp"
#include "pensemble/sphere_lift.hpp"

namespace pensemble {

namespace {

bool is_euclidean(EnergyKind kind) { return kind == EnergyKind::riesz || kind == EnergyKind::log; }

void validate(const ExperimentConfig& c, const std::vector<EnergySpec>& energies) {
  if (c.d < 1) throw DomainError("run_experiment: d must be >= 1");
  if (c.L < 0) throw DomainError("run_experiment: L must be >= 0");
  if (c.k < 0) throw DomainError("run_experiment: k must be >= 0");
  if (c.trials < 2) throw DomainError("run_experiment: trials must be >= 2");
  if (c.mom_blocks < 2) throw DomainError("run_experiment: median-of-means needs >= 2 blocks");
  if (energies.empty()) throw DomainError("run_experiment: no energies requested");
  for (const EnergySpec& e : energies) {
    if (is_euclidean(e.kind) && c.k < 1) {
      throw DomainError("run_experiment: sphere energies need k >= 1");
    }
    if (e.kind == EnergyKind::riesz && !(e.s > 0.0)) {
      throw DomainError("run_experiment: riesz energy needs s > 0");
    }
    if (e.kind == EnergyKind::projective_riesz && !(e.s > 0.0 && e.s < 2.0 * c.d)) {
      throw DomainError("run_experiment: projective s must lie in (0, 2d)");
    }
    if (e.kind == EnergyKind::green && c.d < 2) {
      throw DomainError("run_experiment: green energy needs d >= 2");
    }
  }
}

struct TrialResult {
  std::vector<double> values;
  bool discarded = false;
};

TrialResult run_trial(const ExperimentConfig& c, const std::vector<EnergySpec>& energies,
                      const KernelParams& params, std::uint64_t index) {
  Rng rng = derive_trial_rng(c.master_seed, index);
  ProjectiveSample sample = sample_projective_ensemble(params, rng);
  RealPoints lifted;
  if (c.k >= 1) lifted = realify(lift_to_sphere(sample, c.k, rng));

  TrialResult out;
  out.values.reserve(energies.size());
  for (const EnergySpec& e : energies) {
    EnergyReport rep;
    switch (e.kind) {
      case EnergyKind::riesz: rep = riesz_energy(lifted, e.s); break;
      case EnergyKind::log: rep = log_energy(lifted); break;
      case EnergyKind::projective_riesz: rep = projective_riesz_energy(sample.points, e.s); break;
      case EnergyKind::projective_log: rep = projective_log_energy(sample.points); break;
      case EnergyKind::green: rep = green_energy(sample.points, c.d); break;
    }
    if (rep.infinite) out.discarded = true;
    out.values.push_back(rep.value);
  }
  return out;
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  std::sort(v.begin(), v.end());
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Sum in fixed order with Neumaier compensation.
double ordered_sum(const std::vector<double>& v) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : v) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

EnergyStatistics summarize(const EnergySpec& spec, Estimator estimator,
                           const std::vector<double>& values, int blocks,
                           std::optional<double> exact) {
  EnergyStatistics st;
  st.spec = spec;
  st.estimator = estimator;
  st.closed_form_exact = exact;
  const double n = static_cast<double>(values.size());
  st.sample_mean = ordered_sum(values) / n;
  std::vector<double> dev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = values[i] - st.sample_mean;
    dev[i] = t * t;
  }
  st.sample_std = n > 1 ? std::sqrt(ordered_sum(dev) / (n - 1.0)) : 0.0;

  if (estimator == Estimator::mean || values.size() < static_cast<std::size_t>(2 * blocks)) {
    st.estimator = Estimator::mean;
    st.estimate = st.sample_mean;
    st.standard_error = st.sample_std / std::sqrt(n);
  } else {
    // Contiguous blocks by trial index; the first (n mod b) blocks get one more.
    const std::size_t b = static_cast<std::size_t>(blocks);
    const std::size_t base = values.size() / b;
    const std::size_t extra = values.size() % b;
    std::vector<double> means;
    means.reserve(b);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < b; ++i) {
      const std::size_t len = base + (i < extra ? 1 : 0);
      std::vector<double> chunk(values.begin() + pos, values.begin() + pos + len);
      means.push_back(ordered_sum(chunk) / static_cast<double>(len));
      pos += len;
    }
    const double mm = ordered_sum(means) / static_cast<double>(b);
    std::vector<double> mdev(b);
    for (std::size_t i = 0; i < b; ++i) mdev[i] = (means[i] - mm) * (means[i] - mm);
    const double block_std = std::sqrt(ordered_sum(mdev) / static_cast<double>(b - 1));
    st.estimate = median(means);
    // Asymptotic variance of the median of b normal block means.
    st.standard_error = std::sqrt(std::numbers::pi / 2.0) * block_std / std::sqrt(double(b));
  }
  if (exact && st.standard_error > 0.0) st.z_score = (st.estimate - *exact) / st.standard_error;
  return st;
}

}  // namespace

std::vector<EnergySpec> default_energies(int d, int k) {
  std::vector<EnergySpec> out{{EnergyKind::projective_riesz, static_cast<double>(d)},
                              {EnergyKind::projective_log, 0.0}};
  if (d >= 2) out.push_back({EnergyKind::green, 0.0});
  if (k >= 1) out.push_back({EnergyKind::riesz, 2.0});
  return out;
}

Estimator default_estimator(const EnergySpec& spec, int d) {
  if (spec.kind == EnergyKind::projective_riesz && spec.s > d) return Estimator::median_of_means;
  return Estimator::mean;
}

std::optional<double> closed_form_for(const EnergySpec& spec, int d, int L, int k) {
  if (L < 1) return std::nullopt;
  switch (spec.kind) {
    case EnergyKind::projective_riesz:
      if (spec.s > 0.0 && spec.s < 2.0 * d) return expected_projective_riesz(d, L, spec.s).exact;
      return std::nullopt;
    case EnergyKind::projective_log: return expected_projective_log(d, L).exact;
    case EnergyKind::green:
      if (d >= 2) return expected_green_energy(d, L).exact;
      return std::nullopt;
    case EnergyKind::riesz:
      if (k >= 1 && spec.s == 2.0) return expected_sphere_2energy_exact(d, L, k).exact;
      return std::nullopt;
    case EnergyKind::log: return std::nullopt;
  }
  return std::nullopt;
}

bool ExperimentReport::passes(double z_max) const {
  for (const EnergyStatistics& e : energies) {
    if (e.z_score && !(std::abs(*e.z_score) <= z_max)) return false;
  }
  return true;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<EnergySpec> energies =
      config.energies.empty() ? default_energies(config.d, config.k) : config.energies;
  validate(config, energies);
  const KernelParams params(config.d, config.L);

  std::vector<TrialResult> results(config.trials);
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        results[t] = run_trial(config, energies, params, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  report.config = config;
  report.config.energies = energies;
  std::vector<std::vector<double>> columns(energies.size());
  for (const TrialResult& tr : results) {
    if (tr.discarded) {
      ++report.trials_discarded;
      continue;
    }
    ++report.trials_retained;
    for (std::size_t e = 0; e < energies.size(); ++e) columns[e].push_back(tr.values[e]);
  }
  if (report.trials_retained == 0) {
    throw Error("run_experiment: every trial was discarded (coincident points)");
  }
  for (std::size_t e = 0; e < energies.size(); ++e) {
    const Estimator est = config.estimator.value_or(default_estimator(energies[e], config.d));
    report.energies.push_back(summarize(energies[e], est, columns[e], config.mom_blocks,
                                        closed_form_for(energies[e], config.d, config.L, config.k)));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Figure1Row> emit_figure1_data(int d_max) {
  if (d_max < 1) throw DomainError("figure1: d_max must be >= 1");
  std::vector<Figure1Row> rows;
  rows.reserve(static_cast<std::size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) {
    const BoundConstants b = bound_constants(d);
    rows.push_back({d, b.projective_bound, b.harmonic_bound});
  }
  return rows;
}

}  // namespace pensemble
