#include "cwk/jpeg_codec.hpp"

#include <istream>
#include <stdexcept>

namespace cwk::jpeg {

const std::array<std::pair<int, int>, 64>& zigzag_order() {
  static const auto order = [] {
    std::array<std::pair<int, int>, 64> o{};
    int idx = 0;
    for (int s = 0; s <= 14; ++s) {
      if (s % 2 == 0) {
        // even diagonal runs bottom-left to top-right
        for (int r = std::min(s, 7); r >= std::max(0, s - 7); --r) o[idx++] = {r, s - r};
      } else {
        for (int r = std::max(0, s - 7); r <= std::min(s, 7); ++r) o[idx++] = {r, s - r};
      }
    }
    return o;
  }();
  return order;
}

std::array<std::int64_t, 64> zigzag(const QuantMatrix& m) {
  std::array<std::int64_t, 64> v{};
  const auto& order = zigzag_order();
  for (int i = 0; i < 64; ++i) v[i] = m[order[i].first][order[i].second];
  return v;
}

QuantMatrix unzigzag(const std::array<std::int64_t, 64>& v) {
  QuantMatrix m{};
  const auto& order = zigzag_order();
  for (int i = 0; i < 64; ++i) m[order[i].first][order[i].second] = v[i];
  return m;
}

static unsigned bitlen(std::uint64_t v) {
  unsigned n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}

BitString expgolomb_encode(std::int64_t v) {
  BitString out;
  if (v == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t mag = v < 0 ? std::uint64_t(-(v + 1)) + 1 : std::uint64_t(v);
  unsigned len = bitlen(mag);
  for (unsigned i = 0; i < len; ++i) out.push_back(1);
  out.push_back(0);
  out.push_back(v > 0 ? 1 : 0);
  for (unsigned i = len - 1; i-- > 0;) out.push_back(int((mag >> i) & 1u));
  return out;
}

std::size_t expgolomb_length(std::int64_t v) {
  if (v == 0) return 1;
  std::uint64_t mag = v < 0 ? std::uint64_t(-(v + 1)) + 1 : std::uint64_t(v);
  return 2 * std::size_t(bitlen(mag)) + 1;
}

std::int64_t expgolomb_decode(const BitString& bits, std::size_t& pos) {
  if (pos >= bits.size()) throw std::invalid_argument("expgolomb_decode: truncated stream");
  if (bits.bit(pos) == 0) {
    ++pos;
    return 0;
  }
  unsigned len = 0;
  while (pos < bits.size() && bits.bit(pos) == 1) {
    ++len;
    ++pos;
  }
  // still to read: terminating 0, sign, len-1 residual bits
  if (pos + len + 1 > bits.size())
    throw std::invalid_argument("expgolomb_decode: truncated stream");
  ++pos;
  int sign = bits.bit(pos++);
  std::uint64_t mag = 1;
  for (unsigned i = 1; i < len; ++i) mag = (mag << 1) | std::uint64_t(bits.bit(pos++));
  std::int64_t value = std::int64_t(mag);
  return sign ? value : -value;
}

BitString encode_matrix(const QuantMatrix& m) {
  auto v = zigzag(m);
  int nonzero = 0;
  int last_nonzero = -1;
  for (int i = 0; i < 64; ++i)
    if (v[i] != 0) {
      ++nonzero;
      last_nonzero = i;
    }
  if (nonzero > 63)
    throw std::invalid_argument("encode_matrix: more than 63 nonzero entries (6-bit prefix)");
  BitString out = BitString::from_uint(std::uint64_t(nonzero), 6);
  for (int i = 0; i <= last_nonzero; ++i) out = out.concat(expgolomb_encode(v[i]));
  return out;
}

QuantMatrix decode_matrix(const BitString& bits) {
  if (bits.size() < 6) throw std::invalid_argument("decode_matrix: missing 6-bit prefix");
  std::uint64_t nonzero = bits.slice(0, 6).to_uint();
  std::array<std::int64_t, 64> v{};
  std::size_t pos = 6;
  std::uint64_t seen = 0;
  int idx = 0;
  while (seen < nonzero) {
    if (idx >= 64) throw std::invalid_argument("decode_matrix: more values than positions");
    std::int64_t value = expgolomb_decode(bits, pos);
    if (value != 0) ++seen;
    v[idx++] = value;
  }
  if (pos != bits.size()) throw std::invalid_argument("decode_matrix: trailing bits");
  return unzigzag(v);
}

std::vector<QuantMatrix> parse_corpus(std::istream& in) {
  std::vector<std::int64_t> values;
  std::int64_t v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) {
    in.clear();
    std::string tok;
    in >> tok;
    throw std::invalid_argument("corpus: non-integer token '" + tok + "'");
  }
  if (values.empty() || values.size() % 64 != 0)
    throw std::invalid_argument("corpus: value count is not a positive multiple of 64");
  std::vector<QuantMatrix> matrices(values.size() / 64);
  for (std::size_t k = 0; k < matrices.size(); ++k)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) matrices[k][r][c] = values[k * 64 + r * 8 + c];
  return matrices;
}

CorpusStats corpus_stats(const std::vector<QuantMatrix>& matrices) {
  CorpusStats stats;
  stats.matrices = matrices.size();
  bool first = true;
  for (const auto& m : matrices) {
    std::size_t bits = encode_matrix(m).size();
    stats.total_bits += bits;
    stats.min_bits = first ? bits : std::min(stats.min_bits, bits);
    stats.max_bits = first ? bits : std::max(stats.max_bits, bits);
    first = false;
    ++stats.length_histogram[bits];
  }
  return stats;
}

}  // namespace cwk::jpeg
