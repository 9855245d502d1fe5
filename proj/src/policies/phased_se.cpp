#include "imbandit/policies/phased_se.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "imbandit/policies/se.hpp"

namespace imbandit {

int bucket_capacity(int active_size, int window, int d_max,
                    int forced_capacity) {
  if (forced_capacity > 0) return forced_capacity;
  if (d_max >= 1) {
    if (d_max > window) throw std::invalid_argument("d_max exceeds window");
    return window / d_max;
  }
  return active_size;
}

std::vector<std::vector<int>> partition_buckets(const std::vector<int>& active,
                                                int window, int d_max,
                                                int forced_capacity) {
  std::vector<int> sorted = active;
  std::sort(sorted.begin(), sorted.end());
  const int cap = bucket_capacity(static_cast<int>(sorted.size()), window,
                                  d_max, forced_capacity);
  std::vector<std::vector<int>> buckets;
  for (std::size_t i = 0; i < sorted.size(); i += cap) {
    const std::size_t end = std::min(sorted.size(), i + cap);
    buckets.emplace_back(sorted.begin() + i, sorted.begin() + end);
  }
  return buckets;
}

PhasedSePolicy::PhasedSePolicy(int num_arms, long long horizon, int window,
                               int d_max, ScheduleFn schedule,
                               PhaseMeanMode mean_mode, int forced_capacity)
    : Policy(horizon),
      schedule_(std::move(schedule)),
      mean_mode_(mean_mode),
      window_(window),
      d_max_(d_max),
      forced_capacity_(forced_capacity),
      log_horizon_(std::log(static_cast<double>(horizon))),
      active_(static_cast<std::size_t>(num_arms)),
      count_(static_cast<std::size_t>(num_arms), 0),
      sum_(static_cast<std::size_t>(num_arms), 0.0) {
  if (num_arms < 1) throw std::invalid_argument("num_arms must be >= 1");
  std::iota(active_.begin(), active_.end(), 0);
  start_phase();
}

void PhasedSePolicy::start_phase() {
  n_cur_ = schedule_(phase_, delta_tilde_);
  if (n_cur_ <= n_prev_)
    throw std::logic_error("schedule must be strictly increasing");
  const int cap = bucket_capacity(static_cast<int>(active_.size()), window_,
                                  d_max_, forced_capacity_);
  buckets_ = partition_buckets(active_, window_, d_max_, forced_capacity_);
  bucket_idx_ = 0;
  survivors_.clear();

  PhaseSnapshot snap;
  snap.phase = phase_;
  snap.start_round = rounds_;
  snap.delta_tilde = delta_tilde_;
  snap.n_prev = n_prev_;
  snap.n_cur = n_cur_;
  snap.capacity = cap;
  snap.bucket_plays = static_cast<long long>(cap) * (n_cur_ - n_prev_);
  snap.active = active_;
  snap.buckets = buckets_;
  snap.counts = count_;
  snap.sums = sum_;
  phase_log_.push_back(std::move(snap));

  start_bucket();
}

void PhasedSePolicy::start_bucket() {
  bucket_active_ = buckets_[bucket_idx_];
  cursor_ = 0;
  slots_left_ = phase_log_.back().bucket_plays;
}

int PhasedSePolicy::select_arm(long long) { return bucket_active_[cursor_]; }

void PhasedSePolicy::observe(const RoundRecord& rec) {
  ++rounds_;
  if (rec.accrued) {
    ++count_[rec.arm];
    sum_[rec.arm] += rec.reward;
  }
  const std::size_t before = bucket_active_.size();
  eliminate_within_bucket(rec.arm);
  if (bucket_active_.size() == before) ++cursor_;
  if (cursor_ >= bucket_active_.size()) cursor_ = 0;

  if (--slots_left_ > 0) return;
  survivors_.insert(survivors_.end(), bucket_active_.begin(),
                    bucket_active_.end());
  ++bucket_idx_;
  if (bucket_idx_ < buckets_.size())
    start_bucket();
  else
    end_phase();
}

void PhasedSePolicy::eliminate_within_bucket(int arm) {
  if (bucket_active_.size() <= 1 || count_[arm] <= 0) return;
  double best_lcb = -std::numeric_limits<double>::infinity();
  for (int j : bucket_active_) {
    if (count_[j] <= 0) continue;
    const double lcb = sum_[j] / static_cast<double>(count_[j]) -
                       se_confidence_radius(log_horizon_, count_[j]);
    best_lcb = std::max(best_lcb, lcb);
  }
  const double ucb = sum_[arm] / static_cast<double>(count_[arm]) +
                     se_confidence_radius(log_horizon_, count_[arm]);
  if (ucb < best_lcb) {
    auto it = std::find(bucket_active_.begin(), bucket_active_.end(), arm);
    bucket_active_.erase(it);
    phase_log_.back().eliminated_within.push_back(arm);
  }
}

void PhasedSePolicy::end_phase() {
  std::vector<int> kept;
  kept.reserve(survivors_.size());
  if (survivors_.size() > 1) {
    double best = -std::numeric_limits<double>::infinity();
    for (int j : survivors_) {
      if (count_[j] <= 0) continue;
      best = std::max(best, phase_mean(sum_[j], count_[j], n_cur_, mean_mode_));
    }
    for (int j : survivors_) {
      const bool drop =
          count_[j] > 0 && phase_mean(sum_[j], count_[j], n_cur_, mean_mode_) +
                                   delta_tilde_ / 2.0 <
                               best - delta_tilde_ / 2.0;
      if (drop)
        phase_log_.back().eliminated_end.push_back(j);
      else
        kept.push_back(j);
    }
  } else {
    kept = survivors_;
  }
  active_ = std::move(kept);  // buckets are ascending chunks, so this is sorted
  delta_tilde_ /= 2.0;
  ++phase_;
  n_prev_ = n_cur_;
  start_phase();
}

}  // namespace imbandit
