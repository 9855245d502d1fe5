#include "imbandit/policy.hpp"

#include <stdexcept>

#include "imbandit/policies/phased_se.hpp"
#include "imbandit/policies/se.hpp"
#include "imbandit/policies/ucb1.hpp"
#include "imbandit/policies/ucb_revisited.hpp"
#include "imbandit/schedule.hpp"

namespace imbandit {

double phase_mean(double reward_sum, long long accrued_count, long long n_m,
                  PhaseMeanMode mode) {
  if (accrued_count < 0) throw std::invalid_argument("accrued_count < 0");
  if (mode == PhaseMeanMode::TargetNormalized) {
    if (n_m < 1) throw std::invalid_argument("n_m must be >= 1");
    return reward_sum / static_cast<double>(n_m);
  }
  return reward_sum / static_cast<double>(accrued_count > 0 ? accrued_count : 1);
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const BanditInstance& instance,
                                    RngStream /*policy_rng*/) {
  const int k = instance.num_arms();
  const long long T = instance.horizon;
  const auto horizon = static_cast<double>(T);
  if (spec.name == "ucb1") return std::make_unique<Ucb1Policy>(k, T);
  if (spec.name == "se") return std::make_unique<SePolicy>(k, T);
  if (spec.name == "phased_se")
    return std::make_unique<PhasedSePolicy>(
        k, T, instance.window, instance.d_max(),
        known_support_schedule(horizon, instance.d_max()), spec.phase_mean,
        spec.bucket_capacity);
  if (spec.name == "ucbr")
    return std::make_unique<UcbRevisitedPolicy>(
        k, T, known_support_schedule(horizon, instance.d_max()),
        spec.phase_mean);
  if (spec.name == "ucbr_plus")
    return std::make_unique<UcbRevisitedPolicy>(
        k, T, known_expectation_schedule(horizon, instance.expected_d()),
        spec.phase_mean);
  throw std::invalid_argument("unknown policy: " + spec.name);
}

}  // namespace imbandit
