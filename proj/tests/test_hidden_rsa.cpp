#include <doctest.h>

#include <stdexcept>

#include "cwk/hidden_rsa.hpp"
#include "cwk/puzzles.hpp"

using namespace cwk;
using namespace cwk::hidden_rsa;

TEST_CASE("oracle basics") {
  Rng rng(1);
  auto inst = RsaInstance::generate(32, 3, rng);
  CHECK(oracle_encrypt(inst, 0) == 0);
  CHECK(oracle_encrypt(inst, 1) == 1);
  for (int trial = 0; trial < 20; ++trial) {
    BigInt x = rng.next_u64();
    CHECK(oracle_encrypt(inst, x) == puzzles::modpow(BigInt(x % inst.n), inst.e, inst.n));
  }
  CHECK_THROWS_AS(oracle_encrypt(inst, max_plaintext()), std::invalid_argument);
}

TEST_CASE("public parameters recovered for e = 3 in under ten queries") {
  Rng rng(2);
  auto inst = RsaInstance::generate(32, 3, rng);
  std::size_t queries = 0;
  Oracle oracle = [&](const BigInt& x) {
    ++queries;
    return oracle_encrypt(inst, x);
  };
  auto rec = recover_public(oracle, 1 << 17, rng);
  REQUIRE(rec.has_value());
  CHECK(rec->e == 3);
  CHECK(rec->n == inst.n);
  CHECK(queries < 10);
}

TEST_CASE("public parameters recovered for e = 65537") {
  Rng rng(3);
  auto inst = RsaInstance::generate(32, 65537, rng);
  Oracle oracle = [&](const BigInt& x) { return oracle_encrypt(inst, x); };
  auto rec = recover_public(oracle, 1 << 17, rng);
  REQUIRE(rec.has_value());
  CHECK(rec->e == 65537);
  CHECK(rec->n == inst.n);
}

TEST_CASE("recovery output reproduces the oracle on fresh probes") {
  Rng rng(4);
  auto inst = RsaInstance::generate(30, 17, rng);
  Oracle oracle = [&](const BigInt& x) { return oracle_encrypt(inst, x); };
  auto rec = recover_public(oracle, 1 << 17, rng);
  REQUIRE(rec.has_value());
  for (int i = 0; i < 50; ++i) {
    BigInt x = rng.next_u64() % rec->n;
    CHECK(puzzles::modpow(x, rec->e, rec->n) == oracle(x));
  }
}

TEST_CASE("a non-RSA oracle is rejected") {
  Rng rng(5);
  Oracle junk = [](const BigInt& x) {
    std::uint64_t h = (x % BigInt(0xfffffffffffffffbull)).convert_to<std::uint64_t>();
    h ^= 0x243f6a8885a308d3ull;
    std::uint64_t s = h;
    return BigInt(splitmix64(s)) * 0x9e3779b97f4a7c15ull + 1;
  };
  CHECK_FALSE(recover_public(junk, 64, rng).has_value());
}

TEST_CASE("gcd refinement narrows monotonically onto the modulus") {
  Rng rng(6);
  auto inst = RsaInstance::generate(32, 5, rng);
  BigInt estimate = 0;
  BigInt two_enc = oracle_encrypt(inst, 2);
  // 2^5 < n, so the first refinement uses an integer difference
  BigInt prev = 0;
  for (int i = 0; i < 6; ++i) {
    BigInt x = 3 + BigInt(rng.next_u64());
    BigInt y = oracle_encrypt(inst, x);
    if (estimate == 0) {
      BigInt whole = x * x * x * x * x;
      estimate = whole - y;
    } else {
      BigInt diff = puzzles::modpow(BigInt(x % estimate), inst.e, estimate) - y % estimate;
      if (diff < 0) diff = -diff;
      BigInt next = boost::multiprecision::gcd(estimate, diff);
      CHECK(next <= estimate);
      estimate = next;
    }
    CHECK(estimate % inst.n == 0);  // stays a multiple of the true modulus
    prev = estimate;
  }
}

TEST_CASE("semiprime factoring") {
  auto [p, q] = factor_semiprime(91);
  CHECK(p == 7);
  CHECK(q == 13);

  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = RsaInstance::generate(32, 3, rng);
    auto [fp, fq] = factor_semiprime(inst.n);
    CHECK(fp == inst.p);
    CHECK(fq == inst.q);
  }
  CHECK_THROWS_AS(factor_semiprime(BigInt(constants::kModulus)), std::invalid_argument);
  CHECK_THROWS_AS(factor_semiprime(BigInt(1000003)), std::invalid_argument);  // prime
}

TEST_CASE("decrypt inverts encrypt") {
  Rng rng(8);
  auto inst = RsaInstance::generate(32, 65537, rng);
  for (int trial = 0; trial < 10; ++trial) {
    BigInt x = BigInt(rng.next_u64()) % inst.n;
    CHECK(rsa_decrypt(inst.p, inst.q, inst.e, oracle_encrypt(inst, x)) == x);
  }
  CHECK_THROWS_AS(private_exponent(7, 13, 6), std::invalid_argument);  // gcd(e, phi) != 1
}

TEST_CASE("published constants are mutually consistent") {
  BigInt n(constants::kModulus), p(constants::kPrimeP), q(constants::kPrimeQ);
  BigInt d(constants::kPrivateExponent), y(constants::kIntercepted);
  BigInt e(constants::kPublicExponent);
  CHECK(p * q == n);
  CHECK((e * d) % ((p - 1) * (q - 1)) == 1);
  CHECK(private_exponent(p, q, e) == d);
  CHECK(rsa_decrypt(p, q, e, y) == constants::kPlainMessage);
}

TEST_CASE("modular inverse") {
  CHECK(modinv(3, 40) == 27);
  CHECK_THROWS_AS(modinv(6, 40), std::invalid_argument);
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    BigInt m = 3 + rng.below(1000000);
    BigInt a = 1 + BigInt(rng.next_u64()) % (m - 1);
    if (boost::multiprecision::gcd(a, m) != 1) continue;
    CHECK((modinv(a, m) * a) % m == 1);
  }
}
