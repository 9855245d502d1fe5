#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "imbandit/env.hpp"
#include "imbandit/instance.hpp"
#include "imbandit/policy.hpp"

namespace imbandit {

// How the instance is obtained: explicit means, or drawn uniformly from [0,1]
// with a recorded seed.
struct InstanceSpec {
  std::vector<double> means;  // explicit when non-empty
  int num_arms = 0;           // random draw when means is empty
  std::uint64_t instance_seed = 0;
  int num_optimal = 1;  // random draw only: top arms raised to the max mean
  ImpairmentSpec impairment = ImpairmentSpec::none();
  int window = 20;
  long long horizon = 5000;

  BanditInstance build() const;
  BanditInstance build_with_optimal(int num_optimal_override) const;
};

enum class ExperimentMode { Single, Switching, Buckets, Impairment };

struct ExperimentConfig {
  InstanceSpec instance_spec;
  BanditInstance instance;  // built once from instance_spec
  PolicySpec policy;
  int runs = 30;
  std::uint64_t master_seed = 1;
  RegretMode regret_mode = RegretMode::MeanOptimal;

  ExperimentMode mode = ExperimentMode::Single;
  std::vector<int> capacities;          // buckets mode
  std::vector<double> impairment_means;  // impairment mode
  double stddev_scale = 0.5;             // impairment mode: stddev_j = scale*(j+1)
  std::vector<int> optimal_arms;         // switching mode
  int histogram_window = 15;

  std::uint64_t config_hash = 0;
  std::map<std::string, std::string> metadata;  // echoed into output headers
};

struct AggregateCurve {
  std::vector<double> mean;    // per-round mean cumulative regret
  std::vector<double> stddev;  // per-round sample standard deviation
  int runs = 0;
};

struct LabeledCurve {
  std::string label;
  AggregateCurve curve;
};

// One seeded simulation. Deterministic in (config.master_seed, run_index);
// distinct run indices get independent streams.
Trace run_single(const ExperimentConfig& config, int run_index);

// Monte Carlo aggregate over config.runs runs. Reduction is performed in
// ascending run index so the result is bit-stable however runs are produced.
AggregateCurve run_monte_carlo(const ExperimentConfig& config);

// Bins records[i] by how often its arm appeared in the previous `window`
// plays; the first `window` records only provide history.
void accumulate_switch_histogram(const std::vector<RoundRecord>& records,
                                 int window, std::vector<long long>& bins);

double histogram_mean_bin(const std::vector<long long>& bins);

// Same-arm-play histogram over all of the config's runs; bins 0..window.
std::vector<long long> switching_histogram(const ExperimentConfig& config,
                                           int window);

struct SwitchingResult {
  int num_optimal = 1;
  std::vector<long long> bins;
  double mean_bin = 0.0;
};

// The arm-switching study: one histogram per entry of config.optimal_arms,
// instances re-drawn from the same instance seed with the top arms tied.
std::vector<SwitchingResult> switching_experiment(const ExperimentConfig& config);

// Bucketed-policy sweep over forced capacities, plus round-robin elimination
// and consecutive-block baselines, all under shared seeds.
std::vector<LabeledCurve> bucket_size_sweep(const ExperimentConfig& base,
                                            const std::vector<int>& capacities);

// Consecutive-block "+" policy under increasing expected impairment. Reward
// streams are paired across sweep points; a mean of 0 uses no impairment.
// Per-arm stddev is base.stddev_scale * (arm index + 1) and the support bound
// is the window length.
std::vector<LabeledCurve> impairment_sweep(const ExperimentConfig& base,
                                           const std::vector<double>& means);

}  // namespace imbandit
