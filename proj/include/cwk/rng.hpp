#pragma once

#include <cstdint>

#include "cwk/bitstring.hpp"

namespace cwk {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic, platform-independent generator. std::uniform_int_distribution
// is avoided on purpose: its output is not pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // rejection sampling, unbiased
    std::uint64_t limit = bound * ((~std::uint64_t(0)) / bound);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

  bool coin() { return next_u64() & 1u; }

  BitString bits(std::size_t n) {
    BitString out(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coin()) out.set_bit(i, 1);
    return out;
  }

  // Independent substream; deterministic in (current state, tag).
  Rng fork(std::uint64_t tag) {
    std::uint64_t s = state_ ^ (0x517cc1b727220a95ull * (tag + 1));
    splitmix64(s);
    return Rng(s);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cwk
