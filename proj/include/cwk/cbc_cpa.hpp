#pragma once

#include <cstdint>
#include <vector>

#include "cwk/bitstring.hpp"
#include "cwk/rng.hpp"

namespace cwk::cbc {

// Keyed permutation on n-bit blocks, n <= 20. The table is a uniformly
// random permutation derived deterministically from (key, seed), which keeps
// simulated games exact and reproducible.
class TablePermutation {
 public:
  TablePermutation(const BitString& key, std::uint64_t seed);

  std::size_t block_bits() const { return n_; }
  std::uint32_t encrypt(std::uint32_t x) const { return fwd_[x]; }
  std::uint32_t decrypt(std::uint32_t y) const { return inv_[y]; }
  BitString encrypt(const BitString& block) const;
  BitString decrypt(const BitString& block) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> fwd_, inv_;
};

// CBC encryption oracle for the indistinguishability game. The IV chains:
// after the first (random) IV, each message starts from the previous
// message's last ciphertext block.
class CbcOracle {
 public:
  CbcOracle(std::size_t block_bits, Rng& rng);

  std::size_t block_bits() const { return n_; }

  // Encrypts m_b for the hidden bit b; returns IV || ciphertext blocks and
  // advances the chained IV. Messages must be equal-length nonempty block
  // multiples.
  BitString encrypt_pair(const BitString& m0, const BitString& m1);

  // test hooks
  int hidden_bit() const { return bit_; }
  const TablePermutation& cipher() const { return perm_; }
  BitString encrypt_chosen_unchecked(const BitString& m);  // allows empty m

 private:
  std::size_t n_;
  TablePermutation perm_;
  int bit_;
  BitString next_iv_;
};

// Decrypts IV || c_1..c_t back to the plaintext (test oracle).
BitString cbc_decrypt(const TablePermutation& perm, const BitString& response);

enum class Strategy { kFirst, kSecond, kCoinFlip };

// Two-query distinguishers exploiting the predictable chained IV.
int adversary_one(CbcOracle& oracle);
int adversary_two(CbcOracle& oracle);

struct AdvantageEstimate {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  double advantage() const { return trials ? double(wins) / double(trials) - 0.5 : 0.0; }
  double abs_advantage() const { return advantage() < 0 ? -advantage() : advantage(); }
};

AdvantageEstimate estimate_advantage(Strategy strategy, std::uint64_t trials, std::uint64_t seed,
                                     std::size_t block_bits = 16, unsigned threads = 0);

}  // namespace cwk::cbc
