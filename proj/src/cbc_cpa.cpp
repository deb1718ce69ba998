#include "cwk/cbc_cpa.hpp"

#include <stdexcept>
#include <thread>

namespace cwk::cbc {

TablePermutation::TablePermutation(const BitString& key, std::uint64_t seed) : n_(key.size()) {
  if (n_ == 0 || n_ > 20) throw std::invalid_argument("TablePermutation: block size must be 1..20 bits");
  std::uint64_t s = seed;
  for (std::size_t i = 0; i < n_; ++i) s = s * 2 + std::uint64_t(key.bit(i));
  Rng rng(splitmix64(s));

  std::size_t size = std::size_t(1) << n_;
  fwd_.resize(size);
  inv_.resize(size);
  for (std::size_t i = 0; i < size; ++i) fwd_[i] = std::uint32_t(i);
  for (std::size_t i = size - 1; i > 0; --i) {
    // multiply-shift range reduction; bias is ~2^-44 at the largest table
    std::size_t j = std::size_t((unsigned __int128)(rng.next_u64()) * (i + 1) >> 64);
    std::swap(fwd_[i], fwd_[j]);
  }
  for (std::size_t i = 0; i < size; ++i) inv_[fwd_[i]] = std::uint32_t(i);
}

BitString TablePermutation::encrypt(const BitString& block) const {
  return BitString::from_uint(encrypt(std::uint32_t(block.to_uint())), n_);
}

BitString TablePermutation::decrypt(const BitString& block) const {
  return BitString::from_uint(decrypt(std::uint32_t(block.to_uint())), n_);
}

CbcOracle::CbcOracle(std::size_t block_bits, Rng& rng)
    : n_(block_bits),
      perm_(rng.bits(block_bits), rng.next_u64()),
      bit_(rng.coin() ? 1 : 0),
      next_iv_(rng.bits(block_bits)) {}

BitString CbcOracle::encrypt_chosen_unchecked(const BitString& m) {
  BitString response = next_iv_;
  BitString prev = next_iv_;
  for (std::size_t off = 0; off + n_ <= m.size(); off += n_) {
    BitString c = perm_.encrypt(prev ^ m.slice(off, n_));
    response = response.concat(c);
    prev = c;
  }
  next_iv_ = prev;
  return response;
}

BitString CbcOracle::encrypt_pair(const BitString& m0, const BitString& m1) {
  if (m0.size() != m1.size()) throw std::invalid_argument("CbcOracle: query lengths differ");
  if (m0.empty() || m0.size() % n_ != 0)
    throw std::invalid_argument("CbcOracle: messages must be nonempty block multiples");
  return encrypt_chosen_unchecked(bit_ ? m1 : m0);
}

BitString cbc_decrypt(const TablePermutation& perm, const BitString& response) {
  std::size_t n = perm.block_bits();
  if (response.size() < n || response.size() % n != 0)
    throw std::invalid_argument("cbc_decrypt: malformed response");
  BitString plain(0);
  BitString prev = response.slice(0, n);
  for (std::size_t off = n; off < response.size(); off += n) {
    BitString c = response.slice(off, n);
    plain = plain.concat(perm.decrypt(c) ^ prev);
    prev = c;
  }
  return plain;
}

int adversary_one(CbcOracle& oracle) {
  std::size_t n = oracle.block_bits();
  BitString zero(n);
  BitString r1 = oracle.encrypt_pair(zero, zero);
  BitString iv = r1.slice(0, n);
  BitString e_iv = r1.slice(n, n);  // E_k(IV): both messages were all-zero

  // Next IV is E_k(IV); feeding IV xor E_k(IV) makes the cipher input IV again.
  BitString m0 = iv ^ e_iv;
  BitString m1 = m0 ^ BitString::ones(n);
  BitString r2 = oracle.encrypt_pair(m0, m1);
  BitString c = r2.slice(n, n);
  return c == e_iv ? 0 : 1;
}

int adversary_two(CbcOracle& oracle) {
  std::size_t n = oracle.block_bits();
  BitString r1 = oracle.encrypt_pair(BitString(n), BitString::ones(n));
  BitString iv = r1.slice(0, n);
  BitString c = r1.slice(n, n);  // E_k(IV) or E_k(IV xor 1)

  BitString m = iv ^ c;
  BitString r2 = oracle.encrypt_pair(m, m);
  BitString c2 = r2.slice(n, n);  // always E_k(IV)
  return c == c2 ? 0 : 1;
}

AdvantageEstimate estimate_advantage(Strategy strategy, std::uint64_t trials, std::uint64_t seed,
                                     std::size_t block_bits, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("estimate_advantage: trials must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  Rng master(seed);

  auto run_trial = [&](Rng rng) -> bool {
    if (strategy == Strategy::kCoinFlip) {
      // no queries; guess blind
      CbcOracle oracle(1, rng);  // 1-bit session; the table is irrelevant
      return (rng.coin() ? 1 : 0) == oracle.hidden_bit();
    }
    CbcOracle oracle(block_bits, rng);
    int guess = strategy == Strategy::kFirst ? adversary_one(oracle) : adversary_two(oracle);
    return guess == oracle.hidden_bit();
  };

  std::vector<Rng> streams;
  streams.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) streams.push_back(master.fork(t));

  std::vector<std::uint64_t> wins(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t t = w; t < trials; t += threads)
        if (run_trial(streams[t])) ++wins[w];
    });
  for (auto& th : pool) th.join();

  AdvantageEstimate est;
  est.trials = trials;
  for (auto w : wins) est.wins += w;
  return est;
}

}  // namespace cwk::cbc
