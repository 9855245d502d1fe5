#include "imbandit/env.hpp"

#include <stdexcept>

namespace imbandit {

SlidingWindowCounter::SlidingWindowCounter(int num_arms, int window)
    : window_(window),
      counts_(static_cast<std::size_t>(num_arms), 0),
      ring_(static_cast<std::size_t>(window) + 1, -1) {
  if (num_arms < 1) throw std::invalid_argument("num_arms must be >= 1");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
}

void SlidingWindowCounter::record_play(int arm) {
  if (arm < 0 || arm >= static_cast<int>(counts_.size()))
    throw std::out_of_range("arm index out of range");
  if (size_ == ring_.size()) {
    --counts_[ring_[head_]];  // evict the play that left the window
  } else {
    ++size_;
  }
  ring_[head_] = arm;
  ++counts_[arm];
  head_ = (head_ + 1) % ring_.size();
}

Environment::Environment(BanditInstance instance, RngStream reward_rng,
                         RngStream impair_rng)
    : instance_(std::move(instance)),
      window_(instance_.num_arms(), instance_.window),
      reward_rng_(reward_rng),
      impair_rng_(impair_rng) {
  instance_.validate();
}

RoundRecord Environment::step(int arm) {
  if (arm < 0 || arm >= instance_.num_arms())
    throw std::out_of_range("arm index out of range");
  ++t_;
  window_.record_play(arm);
  const double u = reward_rng_.uniform01();
  const double generated = u < instance_.arms[arm].mean ? 1.0 : 0.0;
  const int d = instance_.impairments[arm].sample(impair_rng_);
  const bool accrued = window_.count(arm) >= d;
  RoundRecord rec;
  rec.t = t_;
  rec.arm = arm;
  rec.generated = generated;
  rec.accrued = accrued;
  rec.reward = accrued ? generated : 0.0;
  rec.sampled_d = d;
  return rec;
}

Environment make_environment(const BanditInstance& instance,
                             std::uint64_t master_seed, int run_index) {
  const auto run = static_cast<std::uint64_t>(run_index);
  return Environment(instance,
                     RngStream(substream_seed(master_seed, kRewardTag, run)),
                     RngStream(substream_seed(master_seed, kImpairTag, run)));
}

std::vector<double> cumulative_regret(const Trace& trace,
                                      const BanditInstance& instance,
                                      RegretMode mode) {
  if (static_cast<long long>(trace.records.size()) > instance.horizon)
    throw std::invalid_argument("trace longer than instance horizon");
  for (const auto& rec : trace.records) {
    if (rec.arm < 0 || rec.arm >= instance.num_arms())
      throw std::invalid_argument("trace refers to an arm outside the instance");
  }

  const GapInfo info = gaps(instance);
  std::vector<double> curve;
  curve.reserve(trace.records.size());

  if (mode == RegretMode::MeanOptimal) {
    double earned = 0.0;
    long long t = 0;
    for (const auto& rec : trace.records) {
      ++t;
      earned += rec.reward;
      curve.push_back(static_cast<double>(t) * info.mu_star - earned);
    }
    return curve;
  }

  // OracleImpaired: replay the best arm under the same reward stream but a
  // separately seeded impairment stream.
  const auto run = static_cast<std::uint64_t>(trace.run_index);
  Environment oracle(
      instance, RngStream(substream_seed(trace.master_seed, kRewardTag, run)),
      RngStream(substream_seed(trace.master_seed, kOracleImpairTag, run)));
  double oracle_earned = 0.0;
  double earned = 0.0;
  for (const auto& rec : trace.records) {
    oracle_earned += oracle.step(info.j_star).reward;
    earned += rec.reward;
    curve.push_back(oracle_earned - earned);
  }
  return curve;
}

}  // namespace imbandit
