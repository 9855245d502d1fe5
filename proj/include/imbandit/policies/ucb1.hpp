#pragma once

#include <vector>

#include "imbandit/policy.hpp"

namespace imbandit {

// Classic UCB1 index over accrued samples only. Non-accruing plays advance
// time but update nothing (the environment reports accrual separately from a
// zero reward).
double ucb1_index(double accrued_mean, long long accrued_count, long long t);

class Ucb1Policy : public Policy {
 public:
  Ucb1Policy(int num_arms, long long horizon);

  // Each arm once first, in index order; then the index argmax, ties broken
  // by lowest arm. Arms with no accrued sample score +infinity.
  int select_arm(long long t) override;
  void observe(const RoundRecord& rec) override;

  long long accrued_count(int arm) const { return count_[arm]; }
  double accrued_mean(int arm) const { return mean_[arm]; }

 private:
  int num_arms_;
  int sweep_next_ = 0;  // first K rounds play 0..K-1
  std::vector<long long> count_;
  std::vector<double> mean_;
};

}  // namespace imbandit
