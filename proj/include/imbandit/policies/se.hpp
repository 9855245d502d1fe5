#pragma once

#include <vector>

#include "imbandit/policy.hpp"

namespace imbandit {

// Confidence radius sqrt(log_horizon / count); natural log of the overall
// horizon is taken by the caller.
double se_confidence_radius(double log_horizon, long long count);

// Successive elimination: play active arms round-robin in index order; after
// each play test whether the played arm's upper estimate falls below the best
// lower estimate and drop it if so. Arms without an accrued sample are never
// eliminated and never serve as the best (their radius is infinite).
class SePolicy : public Policy {
 public:
  struct Options {
    std::vector<int> arms;                  // active set, ascending
    long long overall_horizon = 2;          // T used inside the radius
    long long play_budget = 0;              // 0 = overall_horizon
    std::vector<long long> inherited_counts;  // per global arm id, optional
    std::vector<double> inherited_sums;       // parallel to counts
  };

  // Baseline construction: all arms active, budget = horizon.
  SePolicy(int num_arms, long long horizon);
  explicit SePolicy(const Options& opts);

  int select_arm(long long t) override;
  void observe(const RoundRecord& rec) override;

  bool budget_exhausted() const { return plays_done_ >= play_budget_; }
  const std::vector<int>& active() const { return active_; }
  long long accrued_count(int arm) const { return count_[arm]; }
  double accrued_mean(int arm) const {
    return count_[arm] > 0 ? sum_[arm] / static_cast<double>(count_[arm]) : 0.0;
  }

 private:
  void eliminate_if_beaten(int arm);

  std::vector<int> active_;
  std::vector<long long> count_;
  std::vector<double> sum_;
  std::size_t cursor_ = 0;
  long long plays_done_ = 0;
  long long play_budget_;
  double log_horizon_;
};

}  // namespace imbandit
