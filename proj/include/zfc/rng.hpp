#pragma once

#include <cstdint>
#include <initializer_list>

namespace zfc {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen over std::mt19937 so that
// streams are identical on every platform and trivially reproducible from a
// 64-bit seed; the algorithm name is recorded in run reports.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform in [0, bound); bound >= 1. Rejection keeps the
  // distribution exactly uniform.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  uint64_t state_;
};

// Order-sensitive seed derivation (used for per-instance and per-chain
// seeds): feeds each part through one SplitMix64 step.
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (uint64_t p : parts) {
    SplitMix64 g(h ^ p);
    h = g.next_u64();
  }
  return h;
}

}  // namespace zfc
