#pragma once

#include <cstdint>
#include <vector>

#include "imbandit/instance.hpp"
#include "imbandit/rng.hpp"

namespace imbandit {

// Play counts over the current round plus the N preceding rounds, i.e. the
// last N+1 plays. Backed by a fixed ring so record_play is O(1).
class SlidingWindowCounter {
 public:
  SlidingWindowCounter(int num_arms, int window);

  void record_play(int arm);
  int count(int arm) const { return counts_[arm]; }
  long long total() const { return static_cast<long long>(size_); }
  int window() const { return window_; }

 private:
  int window_;                // N
  std::vector<int> counts_;   // per arm, over the ring contents
  std::vector<int> ring_;     // capacity N+1
  std::size_t head_ = 0;      // next slot to overwrite
  std::size_t size_ = 0;      // occupied slots, <= N+1
};

struct RoundRecord {
  long long t = 0;       // 1-based round index
  int arm = 0;           // J_t
  double generated = 0;  // R_{t,J_t}
  bool accrued = false;  // window count (incl. this round) >= sampled_d
  double reward = 0;     // X_{t,J_t}; equals generated iff accrued, else 0
  int sampled_d = 0;     // d_{t,J_t}

  bool operator==(const RoundRecord&) const = default;
};

struct Trace {
  std::vector<RoundRecord> records;
  std::uint64_t master_seed = 0;
  int run_index = 0;
};

// Mutable simulation state for one run. Single-threaded; movable, not shared.
class Environment {
 public:
  Environment(BanditInstance instance, RngStream reward_rng,
              RngStream impair_rng);

  // Plays one round. The window is updated with this play before the accrual
  // indicator is evaluated, so a sampled d of 1 always accrues. One reward
  // uniform is drawn per round regardless of the arm, which lets traces with
  // a shared reward stream see identical generated rewards round for round.
  RoundRecord step(int arm);

  long long rounds_played() const { return t_; }
  const BanditInstance& instance() const { return instance_; }
  const SlidingWindowCounter& window_counter() const { return window_; }

 private:
  BanditInstance instance_;
  SlidingWindowCounter window_;
  RngStream reward_rng_;
  RngStream impair_rng_;
  long long t_ = 0;
};

// Builds the environment for (master_seed, run_index) with the standard
// substream layout.
Environment make_environment(const BanditInstance& instance,
                             std::uint64_t master_seed, int run_index);

enum class RegretMode { MeanOptimal, OracleImpaired };

// Per-round cumulative regret of a trace.
//   MeanOptimal:    entry t is t*mu_star - sum of accrued rewards.
//   OracleImpaired: benchmark is a trace that plays j_star every round under
//                   the same impairment process (impairment stream separately
//                   seeded, reward stream shared).
// Throws std::invalid_argument when the trace does not fit the instance.
std::vector<double> cumulative_regret(const Trace& trace,
                                      const BanditInstance& instance,
                                      RegretMode mode);

}  // namespace imbandit
