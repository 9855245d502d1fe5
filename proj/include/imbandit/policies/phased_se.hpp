#pragma once

#include <vector>

#include "imbandit/policy.hpp"
#include "imbandit/schedule.hpp"

namespace imbandit {

// Bucket capacity: forced value when given, else floor(N / d_max), else the
// whole active set when there is no impairment.
int bucket_capacity(int active_size, int window, int d_max,
                    int forced_capacity = 0);

// Chunks the (ascending) active set greedily into buckets of at most
// `capacity` arms. Buckets are disjoint and cover the active set.
std::vector<std::vector<int>> partition_buckets(const std::vector<int>& active,
                                                int window, int d_max,
                                                int forced_capacity = 0);

// Phase-based elimination with bucketed round-robin play. Each phase
// partitions the active arms into buckets sized so the window constraint is
// met by construction, runs an elimination round-robin inside every bucket
// for capacity * (n_m - n_{m-1}) plays, then applies the end-of-phase test
// over the survivors and halves the threshold. Accrued counts and sums carry
// across phases; the round-robin radius uses the overall horizon.
class PhasedSePolicy : public Policy {
 public:
  struct PhaseSnapshot {
    int phase = 1;
    long long start_round = 0;
    double delta_tilde = 1.0;
    long long n_prev = 0, n_cur = 0;
    int capacity = 0;
    long long bucket_plays = 0;  // plays granted to each bucket this phase
    std::vector<int> active;
    std::vector<std::vector<int>> buckets;
    std::vector<long long> counts;  // cumulative accrued counts at phase start
    std::vector<double> sums;
    std::vector<int> eliminated_within;
    std::vector<int> eliminated_end;
  };

  PhasedSePolicy(int num_arms, long long horizon, int window, int d_max,
                 ScheduleFn schedule,
                 PhaseMeanMode mean_mode = PhaseMeanMode::Empirical,
                 int forced_capacity = 0);

  int select_arm(long long t) override;
  void observe(const RoundRecord& rec) override;

  const std::vector<int>& active() const { return active_; }
  const std::vector<PhaseSnapshot>& phase_log() const { return phase_log_; }

 private:
  void start_phase();
  void start_bucket();
  void end_phase();
  void eliminate_within_bucket(int arm);

  ScheduleFn schedule_;
  PhaseMeanMode mean_mode_;
  int window_;
  int d_max_;
  int forced_capacity_;
  double log_horizon_;

  std::vector<int> active_;
  std::vector<long long> count_;
  std::vector<double> sum_;
  int phase_ = 1;
  double delta_tilde_ = 1.0;
  long long n_prev_ = 0, n_cur_ = 0;

  std::vector<std::vector<int>> buckets_;
  std::size_t bucket_idx_ = 0;
  std::vector<int> bucket_active_;
  std::size_t cursor_ = 0;
  long long slots_left_ = 0;
  std::vector<int> survivors_;
  long long rounds_ = 0;
  std::vector<PhaseSnapshot> phase_log_;
};

}  // namespace imbandit
