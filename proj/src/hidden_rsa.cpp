#include "cwk/hidden_rsa.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>
#include <vector>

#include "cwk/puzzles.hpp"

namespace cwk::hidden_rsa {

using boost::multiprecision::gcd;
using puzzles::modpow;

namespace constants {
const char* const kModulus =
    "76200708443433250012501342992033571586971760218934756930058661627867825188509";
const char* const kPrimeP = "232086664036792751646261018215123451301";
const char* const kPrimeQ = "328328681700354546732404725320581286809";
const char* const kPrivateExponent =
    "58041460011714671214337771652949080061981291861469879231637604933853779098273";
const char* const kIntercepted =
    "71511896681324833458361392885184344933333159830863878600189212073777582178173";
}  // namespace constants

const BigInt& max_plaintext() {
  static const BigInt bound = [] {
    BigInt b = 1;
    for (int i = 0; i < 70; ++i) b *= 10;
    return b;
  }();
  return bound;
}

const BigInt& factor_bound() {
  static const BigInt bound = BigInt(1) << 80;
  return bound;
}

static BigInt random_bits(unsigned bits, Rng& rng) {
  BigInt v = 0;
  for (unsigned got = 0; got < bits; got += 64) v = (v << 64) | rng.next_u64();
  v &= (BigInt(1) << bits) - 1;
  return v;
}

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int round = 0; round < rounds; ++round) {
    BigInt a = 2 + random_bits(unsigned(boost::multiprecision::msb(n)) + 1, rng) % (n - 3);
    BigInt x = modpow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = puzzles::mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

static BigInt random_prime(unsigned bits, Rng& rng) {
  while (true) {
    BigInt candidate = random_bits(bits, rng) | (BigInt(1) << (bits - 1)) | 1;
    if (is_probable_prime(candidate, rng)) return candidate;
  }
}

RsaInstance RsaInstance::generate(unsigned prime_bits, const BigInt& e, Rng& rng) {
  while (true) {
    RsaInstance inst;
    inst.e = e;
    inst.p = random_prime(prime_bits, rng);
    do {
      inst.q = random_prime(prime_bits, rng);
    } while (inst.q == inst.p);
    if (inst.p > inst.q) std::swap(inst.p, inst.q);
    BigInt phi = (inst.p - 1) * (inst.q - 1);
    if (gcd(e, phi) != 1) continue;
    inst.n = inst.p * inst.q;
    inst.d = modinv(e, phi);
    return inst;
  }
}

BigInt oracle_encrypt(const RsaInstance& inst, const BigInt& x) {
  if (x < 0 || x >= max_plaintext())
    throw std::invalid_argument("oracle_encrypt: plaintext must have at most 70 digits");
  return modpow(x, inst.e, inst.n);
}

static std::vector<std::uint64_t> candidate_exponents(std::uint64_t max_e) {
  std::vector<std::uint64_t> order;
  for (std::uint64_t e : {3ull, 5ull, 17ull, 257ull, 65537ull})
    if (e <= max_e) order.push_back(e);
  for (std::uint64_t e = 7; e <= max_e; e += 2) {
    bool favorite = e == 17 || e == 257 || e == 65537;
    if (!favorite) order.push_back(e);
  }
  return order;
}

std::optional<RecoveredPublic> recover_public(const Oracle& oracle, std::uint64_t max_e,
                                              Rng& rng) {
  std::size_t queries = 0;
  auto ask = [&](const BigInt& x) {
    ++queries;
    return oracle(x);
  };

  // Shared probe cache; the same x values serve every candidate.
  std::vector<std::pair<BigInt, BigInt>> probes;
  probes.emplace_back(2, ask(2));
  const BigInt encrypted_two = probes[0].second;
  for (int i = 0; i < 5; ++i) {
    // large probes so x^e wraps the modulus even for e = 3
    BigInt x = 3 + random_bits(200, rng);
    probes.emplace_back(x, ask(x));
  }
  BigInt ciphertext_floor = 0;
  for (const auto& [x, y] : probes) ciphertext_floor = std::max(ciphertext_floor, y);

  for (std::uint64_t e : candidate_exponents(max_e)) {
    BigInt pow2 = BigInt(1) << unsigned(e);  // 2^e
    if (pow2 < encrypted_two) continue;      // screening
    BigInt estimate = pow2 - encrypted_two;  // multiple of n when e is right

    bool rejected = false;
    for (std::size_t i = 1; i < probes.size() && !rejected; ++i) {
      const auto& [x, y] = probes[i];
      if (estimate == 0) {
        // 2^e did not wrap; take an integer difference as the first estimate
        if (e > 4096) {
          rejected = true;
          break;
        }
        BigInt whole = 1;
        for (std::uint64_t k = 0; k < e; ++k) whole *= x;
        if (whole < y) {
          rejected = true;
          break;
        }
        estimate = whole - y;
        continue;
      }
      BigInt diff = modpow(BigInt(x % estimate), BigInt(e), estimate) - y % estimate;
      if (diff < 0) diff = -diff;
      estimate = gcd(estimate, diff);
      if (estimate <= ciphertext_floor) rejected = true;
    }
    if (rejected || estimate == 0 || estimate <= ciphertext_floor) continue;

    // validation on fresh probes
    bool valid = true;
    for (int i = 0; i < 3 && valid; ++i) {
      BigInt x = 3 + random_bits(200, rng);
      BigInt y = ask(x);
      valid = y < estimate && modpow(BigInt(x % estimate), BigInt(e), estimate) == y;
    }
    if (!valid) continue;
    return RecoveredPublic{BigInt(e), estimate, queries};
  }
  return std::nullopt;
}

static BigInt rho_brent(const BigInt& n, Rng& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    BigInt y = 2 + random_bits(62, rng) % (n - 2);
    BigInt c = 1 + random_bits(62, rng) % (n - 1);
    BigInt m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        BigInt rk = r - k;
        BigInt limit = m < rk ? m : rk;
        for (BigInt i = 0; i < limit; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

std::pair<BigInt, BigInt> factor_semiprime(const BigInt& n) {
  if (n > factor_bound())
    throw std::invalid_argument(
        "factor_semiprime: input exceeds the 2^80 desk bound; use sieving tools "
        "(msieve, cado-nfs) for moduli of this size");
  if (n < 4) throw std::invalid_argument("factor_semiprime: need a composite >= 4");
  for (std::uint64_t d = 2; d <= 1000000; ++d) {
    if (n % d == 0) {
      BigInt p = d, q = n / d;
      return p <= q ? std::make_pair(p, q) : std::make_pair(q, p);
    }
    if (BigInt(d) * d > n) break;
  }
  Rng rng(0x9d2c5680u);
  if (is_probable_prime(n, rng)) throw std::invalid_argument("factor_semiprime: input is prime");
  BigInt p = rho_brent(n, rng);
  BigInt q = n / p;
  return p <= q ? std::make_pair(p, q) : std::make_pair(q, p);
}

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (a == 0) {
    x = 0;
    y = 1;
    return b;
  }
  BigInt x1, y1;
  BigInt g = egcd(b % a, a, x1, y1);
  x = y1 - (b / a) * x1;
  y = x1;
  return g;
}

BigInt modinv(const BigInt& a, const BigInt& m) {
  BigInt x, y;
  BigInt g = egcd(((a % m) + m) % m, m, x, y);
  if (g != 1) throw std::invalid_argument("modinv: arguments are not coprime");
  return ((x % m) + m) % m;
}

BigInt private_exponent(const BigInt& p, const BigInt& q, const BigInt& e) {
  return modinv(e, (p - 1) * (q - 1));
}

BigInt rsa_decrypt(const BigInt& p, const BigInt& q, const BigInt& e, const BigInt& y) {
  BigInt d = private_exponent(p, q, e);
  return modpow(y, d, BigInt(p * q));
}

}  // namespace cwk::hidden_rsa
