#include "imbandit/policies/ucb1.hpp"

#include <cmath>
#include <limits>

namespace imbandit {

double ucb1_index(double accrued_mean, long long accrued_count, long long t) {
  if (accrued_count <= 0) return std::numeric_limits<double>::infinity();
  return accrued_mean + std::sqrt(2.0 * std::log(static_cast<double>(t)) /
                                  static_cast<double>(accrued_count));
}

Ucb1Policy::Ucb1Policy(int num_arms, long long horizon)
    : Policy(horizon),
      num_arms_(num_arms),
      count_(static_cast<std::size_t>(num_arms), 0),
      mean_(static_cast<std::size_t>(num_arms), 0.0) {}

int Ucb1Policy::select_arm(long long t) {
  if (sweep_next_ < num_arms_) return sweep_next_;
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < num_arms_; ++j) {
    const double idx = ucb1_index(mean_[j], count_[j], t);
    if (idx > best_index) {
      best_index = idx;
      best = j;
    }
  }
  return best;
}

void Ucb1Policy::observe(const RoundRecord& rec) {
  if (sweep_next_ < num_arms_) ++sweep_next_;
  if (!rec.accrued) return;
  const int j = rec.arm;
  ++count_[j];
  mean_[j] += (rec.reward - mean_[j]) / static_cast<double>(count_[j]);
}

}  // namespace imbandit
