#include "imbandit/policies/ucb_revisited.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace imbandit {

UcbRevisitedPolicy::UcbRevisitedPolicy(int num_arms, long long horizon,
                                       ScheduleFn schedule,
                                       PhaseMeanMode mean_mode)
    : Policy(horizon),
      schedule_(std::move(schedule)),
      mean_mode_(mean_mode),
      active_(static_cast<std::size_t>(num_arms)),
      count_(static_cast<std::size_t>(num_arms), 0),
      sum_(static_cast<std::size_t>(num_arms), 0.0) {
  if (num_arms < 1) throw std::invalid_argument("num_arms must be >= 1");
  std::iota(active_.begin(), active_.end(), 0);
  start_phase();
}

void UcbRevisitedPolicy::start_phase() {
  n_cur_ = schedule_(phase_, delta_tilde_);
  if (n_cur_ <= n_prev_)
    throw std::logic_error("schedule must be strictly increasing");
  arm_pos_ = 0;
  block_left_ = n_cur_ - n_prev_;
  PhaseInfo info;
  info.phase = phase_;
  info.start_round = rounds_;
  info.delta_tilde = delta_tilde_;
  info.n_prev = n_prev_;
  info.n_cur = n_cur_;
  info.active = active_;
  phase_log_.push_back(std::move(info));
}

int UcbRevisitedPolicy::select_arm(long long) { return active_[arm_pos_]; }

void UcbRevisitedPolicy::observe(const RoundRecord& rec) {
  ++rounds_;
  if (rec.accrued) {
    ++count_[rec.arm];
    sum_[rec.arm] += rec.reward;
  }
  if (--block_left_ > 0) return;
  ++arm_pos_;
  if (arm_pos_ < active_.size()) {
    block_left_ = n_cur_ - n_prev_;
    return;
  }
  end_phase();
}

void UcbRevisitedPolicy::end_phase() {
  if (active_.size() > 1) {
    double best = -std::numeric_limits<double>::infinity();
    for (int j : active_) {
      if (count_[j] <= 0) continue;
      best = std::max(best, phase_mean(sum_[j], count_[j], n_cur_, mean_mode_));
    }
    std::vector<int> kept;
    kept.reserve(active_.size());
    for (int j : active_) {
      const bool drop =
          count_[j] > 0 && phase_mean(sum_[j], count_[j], n_cur_, mean_mode_) +
                                   delta_tilde_ / 2.0 <
                               best - delta_tilde_ / 2.0;
      if (drop)
        phase_log_.back().eliminated.push_back(j);
      else
        kept.push_back(j);
    }
    active_ = std::move(kept);
  }
  delta_tilde_ /= 2.0;
  ++phase_;
  n_prev_ = n_cur_;
  start_phase();
}

}  // namespace imbandit
