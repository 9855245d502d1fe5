#pragma once

#include <string>
#include <vector>

#include "imbandit/rng.hpp"

namespace imbandit {

// A single arm: Bernoulli reward with the given bias.
struct ArmSpec {
  double mean = 0.0;
};

// Per-round play requirement d sampled each time the arm is played. Rewards
// accrue only when the arm's count in the trailing window reaches d.
struct ImpairmentSpec {
  enum class Kind { Constant, UniformInt, AbsNormal };

  Kind kind = Kind::Constant;
  int value = 0;        // Constant
  int lo = 0, hi = 0;   // UniformInt
  double mean = 0.0;    // AbsNormal
  double stddev = 1.0;  // AbsNormal
  int d_max = 0;        // upper bound of the support; samples are clipped here

  static ImpairmentSpec none();
  static ImpairmentSpec constant(int value);
  static ImpairmentSpec uniform_int(int lo, int hi);
  static ImpairmentSpec abs_normal(double mean, double stddev, int d_max);

  // Sampled values always land in {0, ..., d_max}.
  int sample(RngStream& rng) const;

  // E[d]. Exact for Constant/UniformInt; for AbsNormal the factory estimates
  // it once from 10^6 clipped samples at a fixed internal seed (the closed
  // form of the rounded, clipped |Normal| is not worth carrying around).
  double expected_value() const { return expected_; }

  double expected_ = 0.0;  // set by the factories
};

// A complete problem instance: arms, per-arm impairment, window length N and
// horizon T.
struct BanditInstance {
  std::vector<ArmSpec> arms;
  std::vector<ImpairmentSpec> impairments;
  int window = 1;     // N
  long long horizon = 2;  // T

  int num_arms() const { return static_cast<int>(arms.size()); }
  int d_max() const;          // max over arms
  double expected_d() const;  // mean over arms of per-arm E[d]

  // Throws std::invalid_argument when a structural invariant is broken
  // (K < 2, mean outside [0,1], d_max > N, ...).
  void validate() const;
};

// Convenience builder: every arm shares the same impairment spec.
BanditInstance make_instance(std::vector<double> means, ImpairmentSpec shared,
                             int window, long long horizon);

// Random instance with means drawn uniformly from [0,1]. When num_optimal > 1
// the top num_optimal means are raised to the maximum so the instance has that
// many optimal arms.
BanditInstance random_instance(int num_arms, std::uint64_t instance_seed,
                               ImpairmentSpec shared, int window,
                               long long horizon, int num_optimal = 1);

struct GapInfo {
  double mu_star = 0.0;
  int j_star = 0;  // ties broken by lowest arm index
  std::vector<double> gaps;
};

GapInfo gaps(const BanditInstance& instance);

// Dissimilarity parameter: max of gap_j / gap_k over ordered pairs of distinct
// suboptimal arms with gap_j <= gap_k and gap_k > 0. Zero when no valid pair
// exists.
double epsilon(const BanditInstance& instance);

}  // namespace imbandit
