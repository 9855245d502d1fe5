#include "imbandit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace imbandit {

BanditInstance InstanceSpec::build() const {
  return build_with_optimal(num_optimal);
}

BanditInstance InstanceSpec::build_with_optimal(int num_optimal_override) const {
  if (!means.empty())
    return make_instance(means, impairment, window, horizon);
  return random_instance(num_arms, instance_seed, impairment, window, horizon,
                         num_optimal_override);
}

Trace run_single(const ExperimentConfig& config, int run_index) {
  Environment env =
      make_environment(config.instance, config.master_seed, run_index);
  RngStream policy_rng(substream_seed(config.master_seed, kPolicyTag,
                                      static_cast<std::uint64_t>(run_index)));
  auto policy = make_policy(config.policy, config.instance, policy_rng);
  Trace trace;
  trace.master_seed = config.master_seed;
  trace.run_index = run_index;
  trace.records.reserve(static_cast<std::size_t>(config.instance.horizon));
  for (long long t = 1; !policy->is_done(t); ++t) {
    const int arm = policy->select_arm(t);
    const RoundRecord rec = env.step(arm);
    trace.records.push_back(rec);
    policy->observe(rec);
  }
  return trace;
}

AggregateCurve run_monte_carlo(const ExperimentConfig& config) {
  if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
  const auto len = static_cast<std::size_t>(config.instance.horizon);
  std::vector<double> sum(len, 0.0), sumsq(len, 0.0);
  for (int run = 0; run < config.runs; ++run) {
    const Trace trace = run_single(config, run);
    const std::vector<double> regret =
        cumulative_regret(trace, config.instance, config.regret_mode);
    for (std::size_t i = 0; i < len; ++i) {
      sum[i] += regret[i];
      sumsq[i] += regret[i] * regret[i];
    }
  }
  AggregateCurve curve;
  curve.runs = config.runs;
  curve.mean.resize(len);
  curve.stddev.resize(len);
  const double r = config.runs;
  for (std::size_t i = 0; i < len; ++i) {
    curve.mean[i] = sum[i] / r;
    double var = 0.0;
    if (config.runs > 1)
      var = std::max(0.0, (sumsq[i] - sum[i] * sum[i] / r) / (r - 1.0));
    curve.stddev[i] = std::sqrt(var);
  }
  return curve;
}

void accumulate_switch_histogram(const std::vector<RoundRecord>& records,
                                 int window, std::vector<long long>& bins) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  bins.resize(static_cast<std::size_t>(window) + 1, 0);
  const auto w = static_cast<std::size_t>(window);
  for (std::size_t i = w; i < records.size(); ++i) {
    int same = 0;
    for (std::size_t k = i - w; k < i; ++k)
      if (records[k].arm == records[i].arm) ++same;
    ++bins[same];
  }
}

double histogram_mean_bin(const std::vector<long long>& bins) {
  long long total = 0, weighted = 0;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    total += bins[b];
    weighted += static_cast<long long>(b) * bins[b];
  }
  return total > 0 ? static_cast<double>(weighted) / static_cast<double>(total)
                   : 0.0;
}

std::vector<long long> switching_histogram(const ExperimentConfig& config,
                                           int window) {
  std::vector<long long> bins(static_cast<std::size_t>(window) + 1, 0);
  for (int run = 0; run < config.runs; ++run) {
    const Trace trace = run_single(config, run);
    accumulate_switch_histogram(trace.records, window, bins);
  }
  return bins;
}

std::vector<SwitchingResult> switching_experiment(
    const ExperimentConfig& config) {
  std::vector<SwitchingResult> results;
  for (int num_optimal : config.optimal_arms) {
    ExperimentConfig variant = config;
    variant.instance = config.instance_spec.build_with_optimal(num_optimal);
    SwitchingResult res;
    res.num_optimal = num_optimal;
    res.bins = switching_histogram(variant, config.histogram_window);
    res.mean_bin = histogram_mean_bin(res.bins);
    results.push_back(std::move(res));
  }
  return results;
}

namespace {

std::string format_capacity_label(int capacity) {
  return "pse_cap" + std::to_string(capacity);
}

std::string format_mean_label(double mean) {
  std::ostringstream oss;
  oss << "ed" << mean;
  return oss.str();
}

}  // namespace

std::vector<LabeledCurve> bucket_size_sweep(const ExperimentConfig& base,
                                            const std::vector<int>& capacities) {
  if (capacities.empty()) throw std::invalid_argument("no capacities given");
  std::vector<LabeledCurve> curves;
  for (int cap : capacities) {
    ExperimentConfig cfg = base;
    cfg.policy.name = "phased_se";
    cfg.policy.bucket_capacity = cap;
    curves.push_back({format_capacity_label(cap), run_monte_carlo(cfg)});
  }
  for (const char* baseline : {"se", "ucbr"}) {
    ExperimentConfig cfg = base;
    cfg.policy.name = baseline;
    cfg.policy.bucket_capacity = 0;
    curves.push_back({baseline, run_monte_carlo(cfg)});
  }
  return curves;
}

std::vector<LabeledCurve> impairment_sweep(const ExperimentConfig& base,
                                           const std::vector<double>& means) {
  if (means.empty()) throw std::invalid_argument("no impairment means given");
  const int d_max = base.instance_spec.window;
  for (double m : means) {
    if (m < 0.0 || m > d_max)
      throw std::invalid_argument("impairment mean outside [0, d_max]");
  }
  std::vector<LabeledCurve> curves;
  for (double mean : means) {
    ExperimentConfig cfg = base;
    cfg.policy.name = "ucbr_plus";
    cfg.instance = base.instance_spec.build();
    for (int j = 0; j < cfg.instance.num_arms(); ++j) {
      cfg.instance.impairments[j] =
          mean == 0.0 ? ImpairmentSpec::constant(0)
                      : ImpairmentSpec::abs_normal(
                            mean, base.stddev_scale * (j + 1), d_max);
    }
    cfg.instance.validate();
    curves.push_back({format_mean_label(mean), run_monte_carlo(cfg)});
  }
  return curves;
}

}  // namespace imbandit
