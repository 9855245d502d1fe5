#include "imbandit/policies/se.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace imbandit {

double se_confidence_radius(double log_horizon, long long count) {
  if (count <= 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(log_horizon / static_cast<double>(count));
}

namespace {

SePolicy::Options baseline_options(int num_arms, long long horizon) {
  SePolicy::Options opts;
  opts.arms.resize(static_cast<std::size_t>(num_arms));
  std::iota(opts.arms.begin(), opts.arms.end(), 0);
  opts.overall_horizon = horizon;
  return opts;
}

}  // namespace

SePolicy::SePolicy(int num_arms, long long horizon)
    : SePolicy(baseline_options(num_arms, horizon)) {}

SePolicy::SePolicy(const Options& opts)
    : Policy(opts.overall_horizon),
      active_(opts.arms),
      play_budget_(opts.play_budget > 0 ? opts.play_budget
                                        : opts.overall_horizon),
      log_horizon_(std::log(static_cast<double>(opts.overall_horizon))) {
  if (active_.empty()) throw std::invalid_argument("empty arm set");
  std::sort(active_.begin(), active_.end());
  const std::size_t slots = static_cast<std::size_t>(active_.back()) + 1;
  count_.assign(slots, 0);
  sum_.assign(slots, 0.0);
  if (!opts.inherited_counts.empty()) {
    if (opts.inherited_counts.size() < slots ||
        opts.inherited_sums.size() < slots)
      throw std::invalid_argument("inherited state smaller than arm ids");
    for (int j : active_) {
      count_[j] = opts.inherited_counts[j];
      sum_[j] = opts.inherited_sums[j];
    }
  }
}

int SePolicy::select_arm(long long) { return active_[cursor_]; }

void SePolicy::observe(const RoundRecord& rec) {
  ++plays_done_;
  const int j = rec.arm;
  if (rec.accrued) {
    ++count_[j];
    sum_[j] += rec.reward;
  }
  const std::size_t before = active_.size();
  eliminate_if_beaten(j);
  if (active_.size() == before) ++cursor_;  // erase already exposes the next arm
  if (cursor_ >= active_.size()) cursor_ = 0;
}

void SePolicy::eliminate_if_beaten(int arm) {
  if (active_.size() <= 1 || count_[arm] <= 0) return;
  double best_lcb = -std::numeric_limits<double>::infinity();
  for (int j : active_) {
    if (count_[j] <= 0) continue;
    const double lcb = sum_[j] / static_cast<double>(count_[j]) -
                       se_confidence_radius(log_horizon_, count_[j]);
    best_lcb = std::max(best_lcb, lcb);
  }
  const double ucb = sum_[arm] / static_cast<double>(count_[arm]) +
                     se_confidence_radius(log_horizon_, count_[arm]);
  if (ucb < best_lcb) {
    auto it = std::find(active_.begin(), active_.end(), arm);
    active_.erase(it);
  }
}

}  // namespace imbandit
