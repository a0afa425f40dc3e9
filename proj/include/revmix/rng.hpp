// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_RNG_HPP_
#define REVMIX_RNG_HPP_

#include <cstdint>

namespace revmix {

// Counter-based deterministic generator. Output n is a pure function of
// (key, n), so streams are reproducible bit-for-bit across platforms and
// independent of evaluation order. The mixer is the splitmix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix(key_, counter_++); }

  // Uniform double in [0, 1) with 53 significant bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  static std::uint64_t mix(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + counter * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Derives an independent stream key from a parent key and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t key, std::uint64_t stream) {
  return CounterRng::mix(key ^ 0xA0761D6478BD642FULL, stream);
}

}  // namespace revmix

#endif  // REVMIX_RNG_HPP_
