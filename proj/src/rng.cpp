#include "wkern/rng.hpp"

namespace wkern {

std::uint64_t CounterRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) return lo;
  std::uint64_t span = hi - lo;
  if (span == max()) return (*this)();
  std::uint64_t range = span + 1;
  // [0, limit] holds a whole number of copies of [0, range)
  std::uint64_t leftover = (max() % range + 1) % range;
  std::uint64_t limit = max() - leftover;
  for (;;) {
    std::uint64_t x = (*this)();
    if (x <= limit) return lo + x % range;
  }
}

BigInt CounterRng::uniform(const BigInt& lo, const BigInt& hi) {
  if (lo >= hi) return lo;
  BigInt range = hi - lo + 1;
  std::size_t bits = bit_length(range);
  std::size_t words = (bits + 63) / 64;
  // draw `bits` random bits and reject values >= range
  for (;;) {
    BigInt x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      x <<= 64;
      x |= (*this)();
    }
    std::size_t excess = words * 64 - bits;
    x >>= excess;
    if (x < range) return lo + x;
  }
}

}  // namespace wkern
