#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace linnet {

// Deterministic RNG helpers. mt19937_64 output is pinned by the standard, and
// the conversions below avoid the implementation-defined std distributions,
// so streams reproduce bit-for-bit across builds.

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  // modulo bias is negligible for n << 2^64
  return rng() % n;
}

inline double normal(std::mt19937_64& rng, double mean, double sd) {
  // Box-Muller, one draw per call (the second branch is discarded)
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sd * r * std::cos(6.283185307179586476925286766559 * u2);
}

// Sample an index proportionally to non-negative masses (at least one > 0).
int sample_discrete(std::mt19937_64& rng, const std::vector<double>& masses);

// Cumulative-table sampler for repeated draws from a fixed distribution.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& masses);
  int sample(std::mt19937_64& rng) const;

 private:
  std::vector<double> cumulative_;
};

}  // namespace linnet
