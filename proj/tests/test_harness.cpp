#include <doctest.h>

#include <cmath>
#include <numeric>

#include "imbandit/harness.hpp"
#include "test_util.hpp"

using namespace imbandit;

namespace {

ExperimentConfig tiny_config(std::string policy, int runs = 4,
                             std::uint64_t seed = 5) {
  ExperimentConfig cfg;
  cfg.instance_spec.means = {0.8, 0.4, 0.6};
  cfg.instance_spec.impairment = ImpairmentSpec::uniform_int(0, 2);
  cfg.instance_spec.window = 6;
  cfg.instance_spec.horizon = 400;
  cfg.instance = cfg.instance_spec.build();
  cfg.policy.name = std::move(policy);
  cfg.runs = runs;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("run_single is deterministic and runs to the horizon") {
  for (const char* name : {"ucb1", "se", "phased_se", "ucbr", "ucbr_plus"}) {
    auto cfg = tiny_config(name);
    const Trace a = run_single(cfg, 3);
    const Trace b = run_single(cfg, 3);
    CHECK(a.records.size() == 400);
    CHECK(a.records == b.records);
  }
}

TEST_CASE("target-normalized phase means and the oracle benchmark run end to end") {
  for (const char* name : {"phased_se", "ucbr", "ucbr_plus"}) {
    auto cfg = tiny_config(name, /*runs=*/2);
    cfg.policy.phase_mean = PhaseMeanMode::TargetNormalized;
    cfg.regret_mode = RegretMode::OracleImpaired;
    const AggregateCurve curve = run_monte_carlo(cfg);
    REQUIRE(curve.mean.size() == 400);
    for (double v : curve.mean) CHECK(std::isfinite(v));
  }
}

TEST_CASE("unknown policy names are rejected") {
  auto cfg = tiny_config("thompson");
  CHECK_THROWS(run_single(cfg, 0));
}

TEST_CASE("distinct run indices draw distinct reward streams") {
  auto cfg = tiny_config("ucb1");
  const Trace a = run_single(cfg, 0);
  const Trace b = run_single(cfg, 1);
  bool any_diff = false;
  for (int t = 0; t < 100; ++t)
    any_diff |= (a.records[t].generated != b.records[t].generated);
  CHECK(any_diff);
}

TEST_CASE("paired seeds: reward stream is independent of the impairment spec") {
  const auto base = make_instance({0.7, 0.3}, ImpairmentSpec::none(), 8, 200);
  auto heavy = base;
  heavy.impairments.assign(2, ImpairmentSpec::abs_normal(4.0, 2.0, 8));
  auto env_a = make_environment(base, 42, 0);
  auto env_b = make_environment(heavy, 42, 0);
  for (int t = 0; t < 200; ++t) {
    const int arm = t % 2;
    CHECK(env_a.step(arm).generated == env_b.step(arm).generated);
  }
}

TEST_CASE("monte carlo with one run equals that run, stddev zero") {
  auto cfg = tiny_config("se", /*runs=*/1);
  const AggregateCurve curve = run_monte_carlo(cfg);
  const Trace trace = run_single(cfg, 0);
  const auto regret =
      cumulative_regret(trace, cfg.instance, cfg.regret_mode);
  REQUIRE(curve.mean.size() == regret.size());
  for (std::size_t i = 0; i < regret.size(); ++i) {
    CHECK(curve.mean[i] == doctest::Approx(regret[i]));
    CHECK(curve.stddev[i] == 0.0);
  }
}

TEST_CASE("monte carlo mean equals the ascending-order average of runs") {
  auto cfg = tiny_config("ucb1", /*runs=*/30);
  const AggregateCurve curve = run_monte_carlo(cfg);
  std::vector<double> sum(curve.mean.size(), 0.0);
  std::vector<double> lo(curve.mean.size(), 1e18), hi(curve.mean.size(), -1e18);
  for (int run = 0; run < cfg.runs; ++run) {
    const auto regret = cumulative_regret(run_single(cfg, run), cfg.instance,
                                          cfg.regret_mode);
    for (std::size_t i = 0; i < regret.size(); ++i) {
      sum[i] += regret[i];
      lo[i] = std::min(lo[i], regret[i]);
      hi[i] = std::max(hi[i], regret[i]);
    }
  }
  for (std::size_t i = 0; i < sum.size(); ++i) {
    CHECK(curve.mean[i] == doctest::Approx(sum[i] / 30.0).epsilon(1e-12));
    CHECK(curve.mean[i] >= lo[i] - 1e-12);
    CHECK(curve.mean[i] <= hi[i] + 1e-12);
  }
}

TEST_CASE("identical arms drift around zero regret") {
  ExperimentConfig cfg;
  cfg.instance_spec.means = {0.5, 0.5};
  cfg.instance_spec.impairment = ImpairmentSpec::none();
  cfg.instance_spec.window = 1;
  cfg.instance_spec.horizon = 1000;
  cfg.instance = cfg.instance_spec.build();
  cfg.policy.name = "ucb1";
  cfg.runs = 50;
  cfg.master_seed = 9;
  const AggregateCurve curve = run_monte_carlo(cfg);
  const double sigma_mean = std::sqrt(1000 * 0.25 / 50.0);
  CHECK(std::fabs(curve.mean.back()) < 3.0 * sigma_mean);
}

TEST_CASE("switch histogram: constant arm and strict round robin") {
  std::vector<RoundRecord> constant, robin;
  for (int t = 1; t <= 200; ++t) {
    RoundRecord rec;
    rec.t = t;
    rec.arm = 0;
    constant.push_back(rec);
    rec.arm = (t - 1) % 30;
    robin.push_back(rec);
  }
  std::vector<long long> bins;
  accumulate_switch_histogram(constant, 15, bins);
  CHECK(bins[15] == 200 - 15);
  CHECK(std::accumulate(bins.begin(), bins.end(), 0ll) == 200 - 15);

  bins.clear();
  accumulate_switch_histogram(robin, 15, bins);
  CHECK(bins[0] == 200 - 15);
  CHECK(histogram_mean_bin(bins) == 0.0);
}

TEST_CASE("switching experiment produces one histogram per setting") {
  ExperimentConfig cfg;
  cfg.instance_spec.num_arms = 6;
  cfg.instance_spec.instance_seed = 31;
  cfg.instance_spec.window = 4;
  cfg.instance_spec.horizon = 300;
  cfg.instance = cfg.instance_spec.build();
  cfg.policy.name = "ucb1";
  cfg.runs = 3;
  cfg.master_seed = 14;
  cfg.optimal_arms = {1, 3};
  cfg.histogram_window = 10;
  const auto results = switching_experiment(cfg);
  REQUIRE(results.size() == 2);
  for (const auto& r : results) {
    CHECK(r.bins.size() == 11);
    CHECK(std::accumulate(r.bins.begin(), r.bins.end(), 0ll) ==
          3 * (300 - 10));
    CHECK(r.mean_bin == doctest::Approx(histogram_mean_bin(r.bins)));
  }
}

TEST_CASE("bucket sweep: labels, shared seeds, capacity-1 equals the variant") {
  ExperimentConfig cfg;
  cfg.instance_spec.means = {0.9, 0.5, 0.7, 0.3};
  cfg.instance_spec.impairment = ImpairmentSpec::none();
  cfg.instance_spec.window = 8;
  cfg.instance_spec.horizon = 600;
  cfg.instance = cfg.instance_spec.build();
  cfg.policy.name = "phased_se";
  cfg.runs = 5;
  cfg.master_seed = 77;
  const auto curves = bucket_size_sweep(cfg, {1, 4});
  REQUIRE(curves.size() == 4);
  CHECK(curves[0].label == "pse_cap1");
  CHECK(curves[1].label == "pse_cap4");
  CHECK(curves[2].label == "se");
  CHECK(curves[3].label == "ucbr");
  // The reduction at the aggregate level: capacity 1 is the block variant.
  for (std::size_t i = 0; i < curves[0].curve.mean.size(); ++i)
    CHECK(curves[0].curve.mean[i] == curves[3].curve.mean[i]);
}

TEST_CASE("impairment sweep: zero level lowest, labels carry the means") {
  ExperimentConfig cfg;
  cfg.instance_spec.num_arms = 4;
  cfg.instance_spec.instance_seed = 11;
  cfg.instance_spec.window = 10;
  cfg.instance_spec.horizon = 2000;
  cfg.instance = cfg.instance_spec.build();
  cfg.policy.name = "ucbr_plus";
  cfg.runs = 6;
  cfg.master_seed = 21;
  cfg.stddev_scale = 0.5;
  const auto curves = impairment_sweep(cfg, {0.0, 6.0});
  REQUIRE(curves.size() == 2);
  CHECK(curves[0].label == "ed0");
  CHECK(curves[1].label == "ed6");
  CHECK(curves[0].curve.mean.back() <= curves[1].curve.mean.back());
  CHECK_THROWS(impairment_sweep(cfg, {11.0}));  // above the window bound
}
