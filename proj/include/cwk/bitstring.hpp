#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cwk {

// Ordered bit sequence with explicit length. Index 0 is the leftmost bit as
// printed, so BitString::from_string("1100").bit(0) == 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : words_((n + 63) / 64, 0), n_(n) {}

  static BitString from_string(std::string_view s);
  // One byte -> eight bits, most significant bit first.
  static BitString from_bytes(const std::vector<std::uint8_t>& bytes);
  static BitString from_hex(std::string_view hex);
  // Width-bit big-endian encoding of v (bit 0 = most significant).
  static BitString from_uint(std::uint64_t v, std::size_t width);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  int bit(std::size_t i) const { return int((words_[i >> 6] >> (i & 63)) & 1u); }
  void set_bit(std::size_t i, int v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void push_back(int v) {
    if ((n_ & 63) == 0) words_.push_back(0);
    ++n_;
    set_bit(n_ - 1, v);
  }

  BitString& operator^=(const BitString& o);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  // Componentwise AND (the product of two vectors over F2).
  BitString operator&(const BitString& o) const;

  BitString concat(const BitString& o) const;
  BitString slice(std::size_t pos, std::size_t len) const;

  std::size_t popcount() const;
  bool is_zero() const;
  static BitString ones(std::size_t n);

  std::string to_string() const;
  std::vector<std::uint8_t> to_bytes() const;  // requires size % 8 == 0
  std::string to_hex() const;                  // requires size % 4 == 0
  std::uint64_t to_uint() const;               // requires size <= 64

  bool operator==(const BitString& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitString& o) const { return !(*this == o); }
  bool operator<(const BitString& o) const;  // length, then lexicographic

 private:
  std::vector<std::uint64_t> words_;  // bit i at words_[i/64] >> (i%64); tail bits zero
  std::size_t n_ = 0;
};

}  // namespace cwk
