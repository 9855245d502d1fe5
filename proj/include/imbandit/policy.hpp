#pragma once

#include <memory>
#include <string>

#include "imbandit/env.hpp"
#include "imbandit/instance.hpp"

namespace imbandit {

// Divisor used when turning a phase's accrued reward sum into an estimate.
// Empirical divides by the accrued count; TargetNormalized divides by the phase
// target n_m (kept for fidelity experiments; with uneven buckets it can
// exceed 1).
enum class PhaseMeanMode { Empirical, TargetNormalized };

double phase_mean(double reward_sum, long long accrued_count, long long n_m,
                  PhaseMeanMode mode);

// Sequential policy: the driver calls select_arm(t), plays it, and feeds the
// resulting record back through observe(). t is 1-based.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual int select_arm(long long t) = 0;
  virtual void observe(const RoundRecord& rec) = 0;
  bool is_done(long long t) const { return t > horizon_; }
  long long horizon() const { return horizon_; }

 protected:
  explicit Policy(long long horizon) : horizon_(horizon) {}
  long long horizon_;
};

struct PolicySpec {
  std::string name;            // ucb1 | se | phased_se | ucbr | ucbr_plus
  int bucket_capacity = 0;     // phased_se only; 0 = derive from N/d_max
  PhaseMeanMode phase_mean = PhaseMeanMode::Empirical;
};

// Builds a policy for the instance. policy_rng is the policy's own stream; the
// shipped policies are deterministic and do not draw from it, but the slot is
// part of the contract so randomized policies slot in without replumbing.
// Throws std::invalid_argument for unknown names.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const BanditInstance& instance,
                                    RngStream policy_rng);

}  // namespace imbandit
