#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <utility>

#include "cwk/rng.hpp"

namespace cwk::hidden_rsa {

using BigInt = boost::multiprecision::cpp_int;

struct RsaInstance {
  BigInt p, q, n, e, d;

  // Random instance with prime_bits-bit primes and the given public
  // exponent (regenerated until gcd(e, (p-1)(q-1)) = 1).
  static RsaInstance generate(unsigned prime_bits, const BigInt& e, Rng& rng);
};

// 10^70; the original oracle accepted at most 70 decimal digits.
const BigInt& max_plaintext();

// x^e mod n; x limited to 70 decimal digits like the original oracle.
BigInt oracle_encrypt(const RsaInstance& inst, const BigInt& x);

using Oracle = std::function<BigInt(const BigInt&)>;

struct RecoveredPublic {
  BigInt e, n;
  std::size_t queries = 0;
};

// Scans candidate exponents (Fermat favorites first, then ascending odds),
// estimating the modulus from 2^e - Encr(2) and shrinking it with gcds of
// probe differences. Returns the first candidate that reproduces the oracle.
std::optional<RecoveredPublic> recover_public(const Oracle& oracle, std::uint64_t max_e, Rng& rng);

const BigInt& factor_bound();  // 2^80

// Trial division to 1e6 then Brent's cycle variant of Pollard's rho.
// Returns (p, q) with p <= q. Throws on inputs past kFactorBound (desk-scale
// only; a 256-bit modulus needs sieving tools like msieve or cado-nfs) and
// on prime input.
std::pair<BigInt, BigInt> factor_semiprime(const BigInt& n);

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);
BigInt modinv(const BigInt& a, const BigInt& m);  // throws when gcd != 1

// d = e^-1 mod (p-1)(q-1), then y^d mod n.
BigInt rsa_decrypt(const BigInt& p, const BigInt& q, const BigInt& e, const BigInt& y);
BigInt private_exponent(const BigInt& p, const BigInt& q, const BigInt& e);

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds = 32);

// Published challenge constants (decimal strings).
namespace constants {
extern const char* const kModulus;
extern const char* const kPrimeP;
extern const char* const kPrimeQ;
extern const char* const kPrivateExponent;
extern const char* const kIntercepted;
inline constexpr std::uint64_t kPublicExponent = 65537;
inline constexpr std::uint64_t kPlainMessage = 202010181600ull;
}  // namespace constants

}  // namespace cwk::hidden_rsa
