#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cwk/bitstring.hpp"
#include "cwk/rng.hpp"

namespace cwk::hashh {

// Seeded n-bit to n-bit pseudorandom function standing in for the secret f.
class RandomFunction {
 public:
  RandomFunction(std::size_t n_bits, std::uint64_t seed);
  std::size_t n() const { return n_; }
  BitString operator()(const BitString& x) const;

 private:
  std::size_t n_;
  std::uint64_t seed_;
};

struct HashParams {
  std::size_t n = 0;
  std::function<BitString(const BitString&)> f;
};

// h_i = m_i xor f(h_{i-1} xor m_i) from h_0 = 0; returns h_k.
// m must be a nonempty multiple of n bits.
BitString hash(const HashParams& p, const BitString& m);

// The adversary's knowledge: sampled (x, f(x)) pairs with distinct x.
class PairStore {
 public:
  PairStore(std::size_t n, std::vector<std::pair<BitString, BitString>> pairs);
  static PairStore sample(const RandomFunction& f, std::size_t count, Rng& rng);
  // One decimal integer per line; line index is the n-bit input.
  static PairStore from_table(std::istream& in, std::size_t n_bits);

  std::size_t n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  const std::pair<BitString, BitString>& pair(std::size_t i) const { return pairs_[i]; }
  std::optional<BitString> lookup(const BitString& x) const;

 private:
  std::size_t n_;
  std::vector<std::pair<BitString, BitString>> pairs_;
};

// Hash evaluated using only store knowledge; empty when a chaining input
// falls outside the store.
std::optional<BitString> store_hash(const PairStore& store, const BitString& m);

// x||f(x) hashes to zero for every pair, so any two pairs collide.
std::pair<BitString, BitString> find_collision(const PairStore& store);

// H(x || f(x) || m) = H(m).
BitString second_preimage_prepend(const PairStore& store, const BitString& m,
                                  std::size_t pair_index = 0);

// H(m || H(m)+x || H(m)+f(x)) = H(m); the digest must be supplied, the
// adversary cannot evaluate H itself.
BitString second_preimage_append(const PairStore& store, const BitString& m,
                                 const BitString& digest, std::size_t pair_index = 0);

struct LinearAttackResult {
  bool success = false;
  BitString preimage;
  std::size_t rotation = 0;  // store-order rotation that produced m' != m
};

// Expresses the digest as a combination of y_i = x_i xor f(x_i) columns and
// rebuilds a message block-by-block from the chosen chaining inputs. Fails
// only when the digest is outside the span of the y_i.
LinearAttackResult second_preimage_linear(const PairStore& store, const BitString& m,
                                          const BitString& digest);

// Web-oracle message syntax: 'b'-prefixed binary or 'h'-prefixed hex.
BitString parse_prefixed_message(const std::string& text);

}  // namespace cwk::hashh
