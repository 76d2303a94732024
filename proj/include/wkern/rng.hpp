#pragma once

#include <cstdint>
#include <limits>

#include "wkern/bigint.hpp"

namespace wkern {

/// Counter-based generator: the i-th output is a fixed mixing function of
/// (seed, i), so any stream position can be recomputed without replaying the
/// stream. The mixer is the SplitMix64 finalizer.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return at(counter_++); }

  /// Output at an absolute stream position; does not advance the counter.
  result_type at(std::uint64_t position) const {
    return mix(seed_ + (position + 1) * kGamma);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return counter_; }

  /// Uniform integer in [lo, hi]; rejection sampling, no modulo bias.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// Uniform big integer in [lo, hi].
  BigInt uniform(const BigInt& lo, const BigInt& hi);

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Independent child seed for sub-stream `stream` of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return CounterRng::mix(seed ^ CounterRng::mix(stream + 0x632BE59BD9B4E019ULL));
}

}  // namespace wkern
