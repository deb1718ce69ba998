#include "cwk/hash_h.hpp"

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

#include "cwk/f2linalg.hpp"

namespace cwk::hashh {

RandomFunction::RandomFunction(std::size_t n_bits, std::uint64_t seed) : n_(n_bits), seed_(seed) {
  if (n_ < 8 || n_ % 8 != 0) throw std::invalid_argument("RandomFunction: n must be a multiple of 8, n >= 8");
}

BitString RandomFunction::operator()(const BitString& x) const {
  if (x.size() != n_) throw std::invalid_argument("RandomFunction: input width mismatch");
  auto bytes = x.to_bytes();
  std::uint64_t state = seed_ ^ 0xa5b35705987c3c1bull;
  std::uint64_t chunk = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    chunk = chunk << 8 | bytes[i];
    if (i % 8 == 7 || i + 1 == bytes.size()) {
      std::uint64_t s = state ^ chunk;
      state = splitmix64(s);
      chunk = 0;
    }
  }
  std::vector<std::uint8_t> out(n_ / 8);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % 8 == 0) {
      std::uint64_t s = state + i;
      word = splitmix64(s);
    }
    out[i] = std::uint8_t(word >> (56 - 8 * (i % 8)));
  }
  return BitString::from_bytes(out);
}

BitString hash(const HashParams& p, const BitString& m) {
  if (m.empty() || m.size() % p.n != 0)
    throw std::invalid_argument("hash: message must be a nonempty multiple of n bits");
  BitString h(p.n);
  for (std::size_t off = 0; off < m.size(); off += p.n) {
    BitString block = m.slice(off, p.n);
    h = block ^ p.f(h ^ block);
  }
  return h;
}

PairStore::PairStore(std::size_t n, std::vector<std::pair<BitString, BitString>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  std::map<BitString, const BitString*> seen;
  for (const auto& [x, fx] : pairs_) {
    if (x.size() != n_ || fx.size() != n_)
      throw std::invalid_argument("PairStore: pair width mismatch");
    auto [it, inserted] = seen.emplace(x, &fx);
    if (!inserted) throw std::invalid_argument("PairStore: duplicate input");
  }
}

PairStore PairStore::sample(const RandomFunction& f, std::size_t count, Rng& rng) {
  std::map<BitString, bool> used;
  std::vector<std::pair<BitString, BitString>> pairs;
  while (pairs.size() < count) {
    BitString x = rng.bits(f.n());
    if (used.emplace(x, true).second) pairs.emplace_back(x, f(x));
  }
  return PairStore(f.n(), std::move(pairs));
}

PairStore PairStore::from_table(std::istream& in, std::size_t n_bits) {
  std::vector<std::pair<BitString, BitString>> pairs;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(begin, end - begin + 1);
    // decimal big integer -> n-bit big-endian value
    BitString value(n_bits);
    std::vector<std::uint8_t> digits;
    for (char c : token) {
      if (c < '0' || c > '9') throw std::invalid_argument("f table: non-digit in '" + token + "'");
      digits.push_back(std::uint8_t(c - '0'));
    }
    // repeated division by 2 to extract bits from the least significant end
    std::size_t bit = n_bits;
    while (!digits.empty() && !(digits.size() == 1 && digits[0] == 0)) {
      if (bit == 0) throw std::invalid_argument("f table: value does not fit n bits");
      int rem = 0;
      std::vector<std::uint8_t> next;
      for (std::uint8_t d : digits) {
        int cur = rem * 10 + d;
        if (!next.empty() || cur / 2 != 0) next.push_back(std::uint8_t(cur / 2));
        rem = cur % 2;
      }
      value.set_bit(--bit, rem);
      digits = std::move(next);
    }
    BitString input(n_bits);
    for (std::size_t j = 0; j < 64 && j < n_bits; ++j)
      if ((index >> j) & 1u) input.set_bit(n_bits - 1 - j, 1);
    pairs.emplace_back(std::move(input), std::move(value));
    ++index;
  }
  if (pairs.empty()) throw std::invalid_argument("f table: no entries");
  return PairStore(n_bits, std::move(pairs));
}

std::optional<BitString> PairStore::lookup(const BitString& x) const {
  for (const auto& [xi, fxi] : pairs_)
    if (xi == x) return fxi;
  return std::nullopt;
}

std::optional<BitString> store_hash(const PairStore& store, const BitString& m) {
  if (m.empty() || m.size() % store.n() != 0) return std::nullopt;
  BitString h(store.n());
  for (std::size_t off = 0; off < m.size(); off += store.n()) {
    BitString block = m.slice(off, store.n());
    auto fx = store.lookup(h ^ block);
    if (!fx) return std::nullopt;
    h = block ^ *fx;
  }
  return h;
}

std::pair<BitString, BitString> find_collision(const PairStore& store) {
  if (store.size() < 2) throw std::invalid_argument("find_collision: need at least two pairs");
  const auto& [x1, f1] = store.pair(0);
  const auto& [x2, f2] = store.pair(1);
  BitString m1 = x1.concat(f1);
  BitString m2 = x2.concat(f2);
  auto h1 = store_hash(store, m1);
  auto h2 = store_hash(store, m2);
  if (!h1 || !h2 || *h1 != *h2 || !h1->is_zero())
    throw std::logic_error("find_collision: verification failed");
  return {m1, m2};
}

BitString second_preimage_prepend(const PairStore& store, const BitString& m,
                                  std::size_t pair_index) {
  const auto& [x, fx] = store.pair(pair_index);
  return x.concat(fx).concat(m);
}

BitString second_preimage_append(const PairStore& store, const BitString& m,
                                 const BitString& digest, std::size_t pair_index) {
  if (digest.size() != store.n())
    throw std::invalid_argument("second_preimage_append: digest of n bits required");
  const auto& [x, fx] = store.pair(pair_index);
  return m.concat(digest ^ x).concat(digest ^ fx);
}

LinearAttackResult second_preimage_linear(const PairStore& store, const BitString& m,
                                          const BitString& digest) {
  std::size_t n = store.n();
  std::size_t count = store.size();
  if (digest.size() != n) throw std::invalid_argument("second_preimage_linear: bad digest width");

  for (std::size_t rotation = 0; rotation < std::min<std::size_t>(count, 8); ++rotation) {
    f2::F2Matrix a(n, count);
    for (std::size_t j = 0; j < count; ++j) {
      const auto& [x, fx] = store.pair((j + rotation) % count);
      BitString y = x ^ fx;
      for (std::size_t r = 0; r < n; ++r)
        if (y.bit(r)) a.set(r, j, 1);
    }
    auto z = a.solve(digest);
    if (!z) return {};  // digest outside the span of the y_i
    if (z->is_zero()) {
      auto kernel = a.nullspace_basis();
      if (kernel.empty()) return {};
      *z = kernel.front();
    }

    // rebuild: m'_j = g'_j xor h_{j-1} over the selected chaining inputs
    BitString preimage(0);
    BitString h(n);
    for (std::size_t j = 0; j < count; ++j) {
      if (!z->bit(j)) continue;
      const auto& [x, fx] = store.pair((j + rotation) % count);
      preimage = preimage.concat(x ^ h);
      h ^= x ^ fx;
    }
    if (h != digest) throw std::logic_error("second_preimage_linear: telescoping mismatch");
    if (preimage == m) continue;  // shuffle the column order and retry
    auto check = store_hash(store, preimage);
    if (!check || *check != digest)
      throw std::logic_error("second_preimage_linear: verification failed");
    return {true, preimage, rotation};
  }
  return {};
}

BitString parse_prefixed_message(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("message: empty");
  if (text[0] == 'b') return BitString::from_string(text.substr(1));
  if (text[0] == 'h') return BitString::from_hex(text.substr(1));
  throw std::invalid_argument("message: must start with 'b' or 'h'");
}

}  // namespace cwk::hashh
