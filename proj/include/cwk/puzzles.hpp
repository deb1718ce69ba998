#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cwk::puzzles {

// Overflow-safe (a*b) % m. The generic version assumes the type is wide
// enough on its own (multi-precision integers); uint64_t gets a 128-bit
// intermediate.
template <typename T>
T mulmod(const T& a, const T& b, const T& m) {
  return (a * b) % m;
}
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t((unsigned __int128)(a) * b % m);
}

// Square-and-multiply; shared by the primality tests and the RSA module
// (instantiated with cpp_int there).
template <typename T, typename E>
T modpow(T base, E exp, const T& modulus) {
  T result = T(1) % modulus;
  base = base % modulus;
  while (exp > 0) {
    if ((exp & 1) != 0) result = mulmod(result, base, modulus);
    base = mulmod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

// A sequence is reachable from another iff the parity of ones in the binary
// representation matches: inserting or deleting 10...01 runs and zeros
// changes the popcount by 0 or 2.
bool winston_reachable(std::uint64_t x, std::uint64_t y);

enum class PolyVerdict { kConsistent, kDivisibilityViolation, kConflictingDuplicate };

// Integer polynomials satisfy (a - b) | (p(a) - p(b)); a sample violating
// that cannot come from one.
PolyVerdict poly_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);
bool poly_consistent(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

struct RgbState {
  int a = 0;
  int b = 0;
  bool operator==(const RgbState&) const = default;
};

enum class RgbQuery { kRed, kGreen, kBlue };

constexpr int kRgbModulus = 324;

RgbState rgb_step(RgbState s, RgbQuery q);
int rgb_invariant(RgbState s);  // (a^2 + b^2) mod 324

// Exhaustive reachability over the 324^2 state space.
bool rgb_can_crash(RgbState start);

}  // namespace cwk::puzzles
