#include "cwk/gf2.hpp"

#include <cctype>
#include <stdexcept>

namespace cwk::gf2 {

Gf128 Gf128::from_block(const std::uint8_t block[16]) {
  Gf128 r;
  for (unsigned i = 0; i < 128; ++i) {
    if (block[i / 8] & (0x80u >> (i % 8))) {
      if (i < 64)
        r.lo |= std::uint64_t(1) << i;
      else
        r.hi |= std::uint64_t(1) << (i - 64);
    }
  }
  return r;
}

void Gf128::to_block(std::uint8_t out[16]) const {
  for (unsigned i = 0; i < 16; ++i) out[i] = 0;
  for (unsigned i = 0; i < 128; ++i) {
    std::uint64_t bit = i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    if (bit) out[i / 8] |= std::uint8_t(0x80u >> (i % 8));
  }
}

static int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("bad hex digit");
}

Gf128 Gf128::from_hex(std::string_view hex32) {
  if (hex32.size() != 32) throw std::invalid_argument("Gf128::from_hex: need 32 hex chars");
  std::uint8_t block[16];
  for (unsigned i = 0; i < 16; ++i)
    block[i] = std::uint8_t(hex_val(hex32[2 * i]) << 4 | hex_val(hex32[2 * i + 1]));
  return from_block(block);
}

std::string Gf128::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::uint8_t block[16];
  to_block(block);
  std::string s(32, '0');
  for (unsigned i = 0; i < 16; ++i) {
    s[2 * i] = digits[block[i] >> 4];
    s[2 * i + 1] = digits[block[i] & 0xf];
  }
  return s;
}

Gf128 Gf128::from_power_sum(std::string_view s) {
  Gf128 r;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    if (!expect_term) {
      if (s[i] != '+') throw std::invalid_argument("power sum: expected '+'");
      ++i;
      skip_ws();
    }
    unsigned exp = 0;
    if (s[i] == '1') {
      ++i;
    } else if (s[i] == 'a') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("power sum: exponent expected after ^");
        exp = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          exp = exp * 10 + unsigned(s[i++] - '0');
      }
    } else {
      throw std::invalid_argument("power sum: expected 'a^k', 'a' or '1'");
    }
    if (exp >= 128) throw std::invalid_argument("power sum: exponent out of range");
    if (exp < 64)
      r.lo ^= std::uint64_t(1) << exp;
    else
      r.hi ^= std::uint64_t(1) << (exp - 64);
    expect_term = false;
  }
  return r;
}

std::string Gf128::to_power_sum() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = 127; e >= 0; --e) {
    std::uint64_t bit = e < 64 ? (lo >> e) & 1u : (hi >> (e - 64)) & 1u;
    if (!bit) continue;
    if (!s.empty()) s += " + ";
    if (e == 0)
      s += "1";
    else if (e == 1)
      s += "a";
    else
      s += "a^" + std::to_string(e);
  }
  return s;
}

// carryless 64x64 -> 128
static void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  hi = 0;
  lo = 0;
  for (unsigned i = 0; i < 64; ++i) {
    std::uint64_t mask = ~((b >> i & 1u) - 1);  // all ones iff bit set
    lo ^= (a << i) & mask;
    hi ^= (((a >> 1) >> (63 - i))) & mask;
  }
}

Gf128 gf_mul(Gf128 a, Gf128 b) {
  // schoolbook product into 256 bits t0..t3
  std::uint64_t t0, t1, t2, t3, h, l;
  clmul64(a.lo, b.lo, t1, t0);
  clmul64(a.hi, b.hi, t3, t2);
  clmul64(a.lo, b.hi, h, l);
  t1 ^= l;
  t2 ^= h;
  clmul64(a.hi, b.lo, h, l);
  t1 ^= l;
  t2 ^= h;
  // fold by x^128 = x^7 + x^2 + x + 1, top limb first
  t1 ^= t3 << 7 ^ t3 << 2 ^ t3 << 1 ^ t3;
  t2 ^= t3 >> 57 ^ t3 >> 62 ^ t3 >> 63;
  t0 ^= t2 << 7 ^ t2 << 2 ^ t2 << 1 ^ t2;
  t1 ^= t2 >> 57 ^ t2 >> 62 ^ t2 >> 63;
  return {t0, t1};
}

Gf128 gf_pow(Gf128 base, std::uint64_t exp_hi, std::uint64_t exp_lo) {
  Gf128 result = Gf128::one();
  for (int i = 127; i >= 0; --i) {
    result = gf_sq(result);
    std::uint64_t bit = i < 64 ? (exp_lo >> i) & 1u : (exp_hi >> (i - 64)) & 1u;
    if (bit) result = gf_mul(result, base);
  }
  return result;
}

Gf128 gf_pow2k(Gf128 a, unsigned k) {
  for (unsigned i = 0; i < k; ++i) a = gf_sq(a);
  return a;
}

Gf128 gf_inv(Gf128 a) {
  if (a.is_zero()) throw std::domain_error("gf_inv: zero has no inverse");
  // a^(2^128 - 2)
  return gf_pow(a, ~std::uint64_t(0), ~std::uint64_t(0) - 1);
}

}  // namespace cwk::gf2
