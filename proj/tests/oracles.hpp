#pragma once

// Test-only oracles, independent of the library implementation paths they
// cross-check.

#include <array>
#include <cstdint>

#include "cwk/gf2.hpp"

namespace cwk::testing {

// Right-shift block multiplication from the GCM specification: 16-byte
// blocks, MSB-first bit numbering, R = e1 || 0^120. A representation
// disjoint from the limb-based implementation.
inline std::array<std::uint8_t, 16> gcm_mult_blocks(const std::array<std::uint8_t, 16>& x,
                                                    const std::array<std::uint8_t, 16>& y) {
  std::array<std::uint8_t, 16> z{};
  std::array<std::uint8_t, 16> v = x;
  for (int i = 0; i < 128; ++i) {
    if (y[i / 8] & (0x80u >> (i % 8)))
      for (int b = 0; b < 16; ++b) z[b] ^= v[b];
    bool lsb = v[15] & 1u;
    for (int b = 15; b > 0; --b) v[b] = std::uint8_t(v[b] >> 1 | (v[b - 1] & 1u) << 7);
    v[0] >>= 1;
    if (lsb) v[0] ^= 0xe1;
  }
  return z;
}

inline gf2::Gf128 oracle_mul(gf2::Gf128 a, gf2::Gf128 b) {
  std::array<std::uint8_t, 16> ab, bb;
  a.to_block(ab.data());
  b.to_block(bb.data());
  auto zb = gcm_mult_blocks(ab, bb);
  return gf2::Gf128::from_block(zb.data());
}

}  // namespace cwk::testing
