#include "imbandit/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace imbandit {

ImpairmentSpec ImpairmentSpec::none() { return constant(0); }

ImpairmentSpec ImpairmentSpec::constant(int value) {
  if (value < 0) throw std::invalid_argument("impairment value must be >= 0");
  ImpairmentSpec s;
  s.kind = Kind::Constant;
  s.value = value;
  s.d_max = value;
  s.expected_ = static_cast<double>(value);
  return s;
}

ImpairmentSpec ImpairmentSpec::uniform_int(int lo, int hi) {
  if (lo < 0 || hi < lo)
    throw std::invalid_argument("impairment range must satisfy 0 <= lo <= hi");
  ImpairmentSpec s;
  s.kind = Kind::UniformInt;
  s.lo = lo;
  s.hi = hi;
  s.d_max = hi;
  s.expected_ = 0.5 * static_cast<double>(lo + hi);
  return s;
}

ImpairmentSpec ImpairmentSpec::abs_normal(double mean, double stddev,
                                          int d_max) {
  if (mean < 0.0 || stddev < 0.0 || d_max < 0)
    throw std::invalid_argument("abs-normal impairment parameters must be >= 0");
  ImpairmentSpec s;
  s.kind = Kind::AbsNormal;
  s.mean = mean;
  s.stddev = stddev;
  s.d_max = d_max;
  RngStream rng(substream_seed(0x0D5EEDull, "d-expectation", 0));
  const int n = 1000000;
  long long sum = 0;
  for (int i = 0; i < n; ++i) sum += s.sample(rng);
  s.expected_ = static_cast<double>(sum) / n;
  return s;
}

int ImpairmentSpec::sample(RngStream& rng) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::UniformInt:
      return rng.uniform_int(lo, hi);
    case Kind::AbsNormal: {
      const double x = std::fabs(rng.normal(mean, stddev));
      long long v = std::llround(x);
      if (v < 0) v = 0;
      if (v > d_max) v = d_max;
      return static_cast<int>(v);
    }
  }
  return 0;
}

int BanditInstance::d_max() const {
  int m = 0;
  for (const auto& s : impairments) m = std::max(m, s.d_max);
  return m;
}

double BanditInstance::expected_d() const {
  if (impairments.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : impairments) sum += s.expected_value();
  return sum / static_cast<double>(impairments.size());
}

void BanditInstance::validate() const {
  if (arms.size() < 2) throw std::invalid_argument("instance needs at least 2 arms");
  if (impairments.size() != arms.size())
    throw std::invalid_argument("one impairment spec per arm required");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  for (const auto& a : arms) {
    if (!(a.mean >= 0.0 && a.mean <= 1.0))
      throw std::invalid_argument("arm mean must lie in [0,1]");
  }
  for (const auto& s : impairments) {
    if (s.d_max > window)
      throw std::invalid_argument("impairment d_max exceeds window");
  }
}

BanditInstance make_instance(std::vector<double> means, ImpairmentSpec shared,
                             int window, long long horizon) {
  BanditInstance inst;
  inst.arms.reserve(means.size());
  for (double m : means) inst.arms.push_back(ArmSpec{m});
  inst.impairments.assign(means.size(), shared);
  inst.window = window;
  inst.horizon = horizon;
  inst.validate();
  return inst;
}

BanditInstance random_instance(int num_arms, std::uint64_t instance_seed,
                               ImpairmentSpec shared, int window,
                               long long horizon, int num_optimal) {
  if (num_arms < 2) throw std::invalid_argument("need at least 2 arms");
  if (num_optimal < 1 || num_optimal > num_arms)
    throw std::invalid_argument("num_optimal out of range");
  RngStream rng(substream_seed(instance_seed, kInstanceTag, 0));
  std::vector<double> means(num_arms);
  for (auto& m : means) m = rng.uniform01();
  if (num_optimal > 1) {
    // Raise the top num_optimal means to the maximum.
    std::vector<int> order(num_arms);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return means[a] > means[b]; });
    const double best = means[order[0]];
    for (int i = 1; i < num_optimal; ++i) means[order[i]] = best;
  }
  return make_instance(std::move(means), shared, window, horizon);
}

GapInfo gaps(const BanditInstance& instance) {
  GapInfo info;
  info.j_star = 0;
  info.mu_star = instance.arms[0].mean;
  for (int j = 1; j < instance.num_arms(); ++j) {
    if (instance.arms[j].mean > info.mu_star) {
      info.mu_star = instance.arms[j].mean;
      info.j_star = j;
    }
  }
  info.gaps.reserve(instance.arms.size());
  for (const auto& a : instance.arms) info.gaps.push_back(info.mu_star - a.mean);
  return info;
}

double epsilon(const BanditInstance& instance) {
  const GapInfo info = gaps(instance);
  std::vector<double> sub;
  for (int j = 0; j < instance.num_arms(); ++j)
    if (j != info.j_star) sub.push_back(info.gaps[j]);
  double eps = 0.0;
  for (std::size_t a = 0; a < sub.size(); ++a) {
    for (std::size_t b = 0; b < sub.size(); ++b) {
      if (a == b) continue;
      if (sub[a] <= sub[b] && sub[b] > 0.0)
        eps = std::max(eps, sub[a] / sub[b]);
    }
  }
  return eps;
}

}  // namespace imbandit
