#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace imbandit {

// Seeded random stream with a fixed, platform-independent draw pattern:
// uniform01() and next_u64() consume one engine output, normal() exactly two.
// Keeping the per-call consumption fixed lets paired experiments share a
// stream position round for round.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Inclusive integer range, one engine output.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(uniform01() * static_cast<double>(span));
    return v > hi ? hi : v;
  }

  // Box-Muller, no caching: exactly two engine outputs per call.
  double normal(double mean, double stddev) {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    return mean + stddev * r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace detail

// Derives an independent stream seed from (master, tag, run index). Streams
// for different tags or runs never collide in practice.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view tag,
                                    std::uint64_t run_index) {
  std::uint64_t h = detail::splitmix64(master ^ detail::fnv1a64(tag));
  h = detail::splitmix64(h ^ (run_index * 0xD1B54A32D192ED03ull));
  return h;
}

// Stream tags used across the library.
inline constexpr std::string_view kRewardTag = "reward";
inline constexpr std::string_view kImpairTag = "impair";
inline constexpr std::string_view kPolicyTag = "policy";
inline constexpr std::string_view kInstanceTag = "instance";
inline constexpr std::string_view kOracleImpairTag = "impair-oracle";

}  // namespace imbandit
