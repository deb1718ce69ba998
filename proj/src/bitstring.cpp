#include "cwk/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace cwk {

BitString BitString::from_string(std::string_view s) {
  BitString out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      out.set_bit(i, 1);
    else if (s[i] != '0')
      throw std::invalid_argument("BitString::from_string: expected only 0/1");
  }
  return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes) {
  BitString out(bytes.size() * 8);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    for (int b = 0; b < 8; ++b)
      if (bytes[i] & (0x80u >> b)) out.set_bit(i * 8 + b, 1);
  return out;
}

static int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("bad hex digit");
}

BitString BitString::from_hex(std::string_view hex) {
  BitString out(hex.size() * 4);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    int v = hex_val(hex[i]);
    for (int b = 0; b < 4; ++b)
      if (v & (8 >> b)) out.set_bit(i * 4 + b, 1);
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t v, std::size_t width) {
  if (width > 64) throw std::invalid_argument("from_uint: width > 64");
  if (width < 64 && (v >> width) != 0)
    throw std::invalid_argument("from_uint: value does not fit width");
  BitString out(width);
  for (std::size_t i = 0; i < width; ++i)
    if ((v >> (width - 1 - i)) & 1u) out.set_bit(i, 1);
  return out;
}

BitString& BitString::operator^=(const BitString& o) {
  if (n_ != o.n_) throw std::invalid_argument("BitString xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitString BitString::operator&(const BitString& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BitString and: length mismatch");
  BitString out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
  return out;
}

BitString BitString::concat(const BitString& o) const {
  BitString out(n_ + o.n_);
  out.words_ = words_;
  out.words_.resize((out.n_ + 63) / 64, 0);
  std::size_t sh = n_ & 63;
  std::size_t base = n_ >> 6;
  if (sh == 0) {
    for (std::size_t i = 0; i < o.words_.size(); ++i) out.words_[base + i] = o.words_[i];
  } else {
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
      out.words_[base + i] |= o.words_[i] << sh;
      if (base + i + 1 < out.words_.size()) out.words_[base + i + 1] |= o.words_[i] >> (64 - sh);
    }
  }
  return out;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > n_) throw std::out_of_range("BitString::slice");
  BitString out(len);
  for (std::size_t i = 0; i < len; ++i)
    if (bit(pos + i)) out.set_bit(i, 1);
  return out;
}

std::size_t BitString::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::size_t(std::popcount(w));
  return c;
}

bool BitString::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

BitString BitString::ones(std::size_t n) {
  BitString out(n);
  for (std::size_t i = 0; i < n; ++i) out.set_bit(i, 1);
  return out;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  if (n_ % 8 != 0) throw std::logic_error("to_bytes: size not a byte multiple");
  std::vector<std::uint8_t> out(n_ / 8, 0);
  for (std::size_t i = 0; i < n_; ++i)
    if (bit(i)) out[i / 8] |= std::uint8_t(0x80u >> (i % 8));
  return out;
}

std::string BitString::to_hex() const {
  if (n_ % 4 != 0) throw std::logic_error("to_hex: size not a nibble multiple");
  static const char* digits = "0123456789abcdef";
  std::string s(n_ / 4, '0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = bit(4 * i) << 3 | bit(4 * i + 1) << 2 | bit(4 * i + 2) << 1 | bit(4 * i + 3);
    s[i] = digits[v];
  }
  return s;
}

std::uint64_t BitString::to_uint() const {
  if (n_ > 64) throw std::logic_error("to_uint: size > 64");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < n_; ++i) v = (v << 1) | std::uint64_t(bit(i));
  return v;
}

bool BitString::operator<(const BitString& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < n_; ++i)
    if (bit(i) != o.bit(i)) return bit(i) < o.bit(i);
  return false;
}

}  // namespace cwk
