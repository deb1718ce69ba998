#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cwk/bitstring.hpp"

namespace cwk::jpeg {

using QuantMatrix = std::array<std::array<std::int64_t, 8>, 8>;

// Standard zigzag scan: (0,0),(0,1),(1,0),(2,0),(1,1),(0,2),...
const std::array<std::pair<int, int>, 64>& zigzag_order();
std::array<std::int64_t, 64> zigzag(const QuantMatrix& m);
QuantMatrix unzigzag(const std::array<std::int64_t, 64>& v);

// Exp-Golomb variant: 0 -> "0"; v != 0 -> unary(bitlen |v|) + "0" + sign bit
// (1 positive) + binary |v| with the leading 1 dropped. 47 -> 1111110 1 01111.
BitString expgolomb_encode(std::int64_t v);
// Reads one codeword starting at pos; advances pos.
std::int64_t expgolomb_decode(const BitString& bits, std::size_t& pos);
std::size_t expgolomb_length(std::int64_t v);  // 2*bitlen+1, or 1 for zero

// 6-bit nonzero count, then codewords along the zigzag until the last nonzero
// (interior zeros included, trailing zeros dropped).
BitString encode_matrix(const QuantMatrix& m);
QuantMatrix decode_matrix(const BitString& bits);

struct CorpusStats {
  std::size_t matrices = 0;
  std::uint64_t total_bits = 0;
  std::size_t min_bits = 0, max_bits = 0;
  std::map<std::size_t, std::size_t> length_histogram;
};

// Whitespace-separated integers, 64 per matrix.
std::vector<QuantMatrix> parse_corpus(std::istream& in);
CorpusStats corpus_stats(const std::vector<QuantMatrix>& matrices);

}  // namespace cwk::jpeg
