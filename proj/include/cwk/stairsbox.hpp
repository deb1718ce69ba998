#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cwk/bitstring.hpp"

namespace cwk::stairsbox {

// Permutation of {0..63}.
struct SBox64 {
  std::array<std::uint8_t, 64> table{};

  static SBox64 identity();
  static SBox64 from_values(const std::vector<int>& values);
  bool is_permutation() const;
  SBox64 inverse() const;
  bool operator==(const SBox64&) const = default;
};

// Invertible F2-linear map on 6-bit values. rows[j] is the input mask whose
// parity gives output bit j (bit 0 = least significant).
struct LinearMap6 {
  std::array<std::uint8_t, 6> rows{};

  static LinearMap6 identity();
  int apply(int x) const {
    int y = 0;
    for (int j = 0; j < 6; ++j) y |= (__builtin_popcount(rows[j] & unsigned(x)) & 1) << j;
    return y;
  }
  bool invertible() const;
  std::optional<LinearMap6> inverse() const;
  // Printed form: row 0 is the top row (most significant output bit), columns
  // left to right from most significant input bit.
  std::array<std::array<int, 6>, 6> to_matrix() const;
  bool operator==(const LinearMap6&) const = default;
};

// x -> a*x + b mod 64 with a odd (a permutation of Z_64).
struct AffineModMap {
  unsigned a = 1;
  unsigned b = 0;
  int apply(int x) const { return int((a * unsigned(x) + b) & 63u); }
  bool operator==(const AffineModMap&) const = default;
  bool operator<(const AffineModMap& o) const { return a != o.a ? a < o.a : b < o.b; }
};

BitString num_to_vec(int x);  // 6 bits, most significant first: 2 -> 000010
int vec_to_num(const BitString& v);

// Algebraic degree of every nonzero linear combination of output coordinates
// (Moebius transform per mask). Index by the 6-bit output mask; entry 0 is
// unused (-1).
std::array<int, 64> anf_degree_table(const SBox64& s);

// Lexicographically smallest degree multiset realizable by 6 linearly
// independent output combinations. An arithmetic core leaks the staircase
// 1,2,3,4,5,5 here.
std::array<int, 6> staircase_degrees(const SBox64& s);

SBox64 compose(const LinearMap6& a, const AffineModMap& x, const LinearMap6& b);

struct Decomposition {
  LinearMap6 a;
  AffineModMap x;
  LinearMap6 b;
};

struct RecoverResult {
  std::vector<Decomposition> triples;
  bool truncated = false;  // hit max_triples (possible only for highly symmetric inputs)
};

// All decompositions S = A o X o B with A, B invertible linear and X affine
// mod 64. Complete depth-first search over rows of A^-1 and B interleaved
// with the bits of (a, b); every emitted triple is re-verified on all 64
// points.
RecoverResult recover(const SBox64& s, std::size_t max_triples = 4096);

std::vector<AffineModMap> x_candidates(const RecoverResult& result);

}  // namespace cwk::stairsbox
