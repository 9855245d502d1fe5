#pragma once

#include <vector>

#include "imbandit/policy.hpp"
#include "imbandit/schedule.hpp"

namespace imbandit {

// Phase-based elimination with consecutive blocks: in phase m every active
// arm is played n_m - n_{m-1} rounds in a row, then arms whose estimate falls
// delta_tilde_m below the best are dropped and the threshold halves. Used with
// the known-support schedule as the plain revisited variant and with the
// known-expectation schedule as the "+" variant.
class UcbRevisitedPolicy : public Policy {
 public:
  struct PhaseInfo {
    int phase = 1;
    long long start_round = 0;  // rounds played before the phase began
    double delta_tilde = 1.0;
    long long n_prev = 0, n_cur = 0;
    std::vector<int> active;
    std::vector<int> eliminated;  // dropped at this phase's end
  };

  UcbRevisitedPolicy(int num_arms, long long horizon, ScheduleFn schedule,
                     PhaseMeanMode mean_mode = PhaseMeanMode::Empirical);

  int select_arm(long long t) override;
  void observe(const RoundRecord& rec) override;

  const std::vector<int>& active() const { return active_; }
  const std::vector<PhaseInfo>& phase_log() const { return phase_log_; }

 private:
  void start_phase();
  void end_phase();

  ScheduleFn schedule_;
  PhaseMeanMode mean_mode_;
  std::vector<int> active_;
  std::vector<long long> count_;
  std::vector<double> sum_;
  int phase_ = 1;
  double delta_tilde_ = 1.0;
  long long n_prev_ = 0, n_cur_ = 0;
  std::size_t arm_pos_ = 0;
  long long block_left_ = 0;
  long long rounds_ = 0;
  std::vector<PhaseInfo> phase_log_;
};

}  // namespace imbandit
