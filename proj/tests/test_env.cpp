#include <doctest.h>

#include <cmath>

#include "imbandit/env.hpp"
#include "test_util.hpp"

using namespace imbandit;

namespace {

Environment env_for(const BanditInstance& inst, std::uint64_t seed,
                    int run = 0) {
  return make_environment(inst, seed, run);
}

}  // namespace

TEST_CASE("sliding window counter matches a brute-force recount") {
  for (int window : {1, 5, 20}) {
    SlidingWindowCounter counter(4, window);
    RngStream rng(1000 + window);
    std::vector<int> plays;
    for (int t = 0; t < 10 * window; ++t) {
      const int arm = rng.uniform_int(0, 3);
      plays.push_back(arm);
      counter.record_play(arm);
      long long total = 0;
      for (int j = 0; j < 4; ++j) {
        const int expect = testutil::brute_force_window_count(
            plays, plays.size() - 1, window, j);
        CHECK(counter.count(j) == expect);
        total += counter.count(j);
      }
      CHECK(total == std::min<long long>(t + 1, window + 1));
    }
  }
}

TEST_CASE("zero requirement always accrues") {
  const auto inst =
      make_instance({0.3, 0.7, 0.5}, ImpairmentSpec::none(), 5, 500);
  auto env = env_for(inst, 7);
  RngStream pick(8);
  for (int t = 0; t < 200; ++t) {
    const auto rec = env.step(pick.uniform_int(0, 2));
    CHECK(rec.accrued);
    CHECK(rec.reward == rec.generated);
  }
}

TEST_CASE("requirement met within the window accrues") {
  const auto inst =
      make_instance({0.5, 0.5}, ImpairmentSpec::constant(2), 4, 100);
  auto env = env_for(inst, 3);
  const auto first = env.step(0);
  CHECK_FALSE(first.accrued);  // count 1 < 2
  CHECK(first.reward == 0.0);
  const auto second = env.step(0);
  CHECK(second.accrued);  // played at t-1 and t, count = 2
}

TEST_CASE("consecutive block under constant requirement loses exactly d-1") {
  const auto inst =
      make_instance({0.9, 0.1}, ImpairmentSpec::constant(3), 7, 100);
  auto env = env_for(inst, 5);
  for (int i = 0; i < 10; ++i) {
    const auto rec = env.step(0);
    CHECK(rec.accrued == (i >= 2));  // window count reaches 3 on the 3rd play
  }
}

TEST_CASE("accrual flags equal a full-history recount on a random trace") {
  const auto inst = make_instance({0.4, 0.6, 0.8, 0.2},
                                  ImpairmentSpec::uniform_int(0, 5), 7, 500);
  auto env = env_for(inst, 11);
  RngStream pick(12);
  std::vector<int> plays;
  for (int t = 0; t < 200; ++t) {
    const int arm = pick.uniform_int(0, 3);
    plays.push_back(arm);
    const auto rec = env.step(arm);
    const int count = testutil::brute_force_window_count(
        plays, plays.size() - 1, inst.window, arm);
    CHECK(rec.accrued == (count >= rec.sampled_d));
    CHECK(rec.reward == (rec.accrued ? rec.generated : 0.0));
  }
}

TEST_CASE("fixed seed fixes the trace bit for bit") {
  const auto inst = make_instance({0.4, 0.6, 0.8},
                                  ImpairmentSpec::uniform_int(0, 3), 5, 300);
  for (int trial = 0; trial < 2; ++trial) {
    auto env_a = env_for(inst, 21, 4);
    auto env_b = env_for(inst, 21, 4);
    RngStream pick_a(22), pick_b(22);
    for (int t = 0; t < 300; ++t) {
      const int arm = pick_a.uniform_int(0, 2);
      CHECK(env_a.step(arm) == env_b.step(pick_b.uniform_int(0, 2)));
    }
  }
}

TEST_CASE("unimpaired constant-arm mean converges to the bias") {
  const double mu = 0.62;
  const auto inst = make_instance({mu, 0.1}, ImpairmentSpec::none(), 1, 200000);
  auto env = env_for(inst, 33);
  const long long n = 100000;
  double sum = 0.0;
  for (long long t = 0; t < n; ++t) sum += env.step(0).reward;
  const double sigma = std::sqrt(mu * (1.0 - mu) / n);
  CHECK(std::fabs(sum / n - mu) < 3.0 * sigma);
}

TEST_CASE("mean-optimal regret increments by mu_star - reward") {
  const auto inst = make_instance({0.3, 0.8, 0.5},
                                  ImpairmentSpec::uniform_int(0, 2), 4, 200);
  Trace trace;
  trace.master_seed = 44;
  auto env = env_for(inst, 44);
  RngStream pick(45);
  for (int t = 0; t < 200; ++t) trace.records.push_back(env.step(pick.uniform_int(0, 2)));
  const auto curve = cumulative_regret(trace, inst, RegretMode::MeanOptimal);
  const double mu_star = 0.8;
  double prev = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double inc = curve[i] - prev;
    CHECK(inc == doctest::Approx(mu_star - trace.records[i].reward));
    CHECK(inc >= mu_star - 1.0 - 1e-12);
    CHECK(inc <= mu_star + 1e-12);
    prev = curve[i];
  }
}

TEST_CASE("alternating policy on deterministic arms: regret is ceil(t/2)") {
  const auto inst = make_instance({1.0, 0.0}, ImpairmentSpec::none(), 1, 100);
  Trace trace;
  auto env = env_for(inst, 50);
  // Alternation starting on the zero arm.
  for (int t = 0; t < 100; ++t) trace.records.push_back(env.step((t + 1) % 2));
  const auto curve = cumulative_regret(trace, inst, RegretMode::MeanOptimal);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const long long t = static_cast<long long>(i) + 1;
    CHECK(curve[i] == doctest::Approx((t + 1) / 2));
  }
}

TEST_CASE("always playing the best unimpaired arm gives zero mean regret") {
  const auto inst = make_instance({0.7, 0.2}, ImpairmentSpec::none(), 1, 1000);
  const int runs = 200;
  std::vector<double> finals;
  for (int run = 0; run < runs; ++run) {
    Trace trace;
    trace.master_seed = 61;
    trace.run_index = run;
    auto env = env_for(inst, 61, run);
    for (int t = 0; t < 1000; ++t) trace.records.push_back(env.step(0));
    finals.push_back(
        cumulative_regret(trace, inst, RegretMode::MeanOptimal).back());
  }
  const double sigma_mean = std::sqrt(1000 * 0.7 * 0.3 / runs);
  CHECK(std::fabs(testutil::mean_of(finals)) < 3.0 * sigma_mean);
}

TEST_CASE("replay oracle re-derives every reward from the recorded seeds") {
  const auto inst = make_instance({0.3, 0.6, 0.9},
                                  ImpairmentSpec::uniform_int(0, 2), 5, 50);
  Trace trace;
  trace.master_seed = 71;
  trace.run_index = 2;
  auto env = env_for(inst, 71, 2);
  RngStream pick(72);
  for (int t = 0; t < 50; ++t) trace.records.push_back(env.step(pick.uniform_int(0, 2)));

  // Same streams, same arms: the records must reproduce exactly, and the
  // regret curve must equal a freshly accumulated one.
  auto replay = env_for(inst, 71, 2);
  double earned = 0.0;
  const auto curve = cumulative_regret(trace, inst, RegretMode::MeanOptimal);
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto rec = replay.step(trace.records[i].arm);
    CHECK(rec == trace.records[i]);
    earned += rec.reward;
    CHECK(curve[i] ==
          doctest::Approx(0.9 * static_cast<double>(i + 1) - earned));
  }
}

TEST_CASE("oracle-impaired benchmark sits below mean-optimal in expectation") {
  const auto inst =
      make_instance({0.8, 0.3}, ImpairmentSpec::constant(3), 6, 400);
  double diff = 0.0;
  const int runs = 100;
  for (int run = 0; run < runs; ++run) {
    Trace trace;
    trace.master_seed = 81;
    trace.run_index = run;
    auto env = env_for(inst, 81, run);
    for (int t = 0; t < 400; ++t) trace.records.push_back(env.step(t % 2));
    const auto mo = cumulative_regret(trace, inst, RegretMode::MeanOptimal);
    const auto oi = cumulative_regret(trace, inst, RegretMode::OracleImpaired);
    diff += mo.back() - oi.back();
  }
  // The oracle forfeits the first couple of plays, so mean-optimal is larger
  // on average.
  CHECK(diff / runs > 0.0);
}

TEST_CASE("regret rejects traces that do not fit the instance") {
  const auto inst = make_instance({0.5, 0.5}, ImpairmentSpec::none(), 1, 10);
  Trace trace;
  auto env = env_for(inst, 91);
  for (int t = 0; t < 10; ++t) trace.records.push_back(env.step(0));
  trace.records.back().arm = 7;
  CHECK_THROWS(cumulative_regret(trace, inst, RegretMode::MeanOptimal));
  Trace long_trace;
  for (int t = 0; t < 11; ++t) long_trace.records.push_back(RoundRecord{});
  CHECK_THROWS(cumulative_regret(long_trace, inst, RegretMode::MeanOptimal));
}

TEST_CASE("environment rejects invalid arms") {
  const auto inst = make_instance({0.5, 0.5}, ImpairmentSpec::none(), 1, 10);
  auto env = env_for(inst, 1);
  CHECK_THROWS(env.step(-1));
  CHECK_THROWS(env.step(2));
}
