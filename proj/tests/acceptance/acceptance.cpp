// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Two criteria assert published values that recomputation contradicts (the
// secret-house power residue and the census-equality claim); they are
// implemented exactly as stated, fail, and print the analysis.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cwk/cbc_cpa.hpp"
#include "cwk/f2linalg.hpp"
#include "cwk/gcm.hpp"
#include "cwk/gf2.hpp"
#include "cwk/hash_h.hpp"
#include "cwk/hidden_rsa.hpp"
#include "cwk/jpeg_codec.hpp"
#include "cwk/orthomorph.hpp"
#include "cwk/primality.hpp"
#include "cwk/puzzles.hpp"
#include "cwk/stairsbox.hpp"
#include "cwk/verify.hpp"
#include "../oracles.hpp"

using namespace cwk;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  Clock::time_point start = Clock::now();
  bool ok = true;
  std::vector<std::string> notes;

  Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }

  ~Criterion() {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                secs);
    for (const auto& n : notes) std::printf("         - %s\n", n.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
  }
};

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<bool> sieve(bound, true);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n < bound; ++n) {
    if (!sieve[n]) continue;
    primes.push_back(n);
    for (std::uint64_t m = n * n; m < bound; m += n) sieve[m] = false;
  }
  return primes;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned workers = worker_count();
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

void criterion_1_primality_q1() {
  Criterion c(1, "modified test never rejects a prime (all n < 1e4, all bases)");
  auto primes = primes_below(10000);
  std::vector<std::uint64_t> bad_n(primes.size(), 0);
  parallel_for(primes.size(), [&](std::size_t i) {
    std::uint64_t n = primes[i];
    if (n < 5) return;
    for (std::uint64_t a = 2; a + 2 <= n; ++a)
      if (primality::bob_test(n, a).value != primality::Outcome::kProbablyPrime) {
        bad_n[i] = a;
        return;
      }
  });
  for (std::size_t i = 0; i < primes.size(); ++i)
    c.require(bad_n[i] == 0, "rejected prime n=" + std::to_string(primes[i]) +
                                 " at base a=" + std::to_string(bad_n[i]));
}

void criterion_2_primality_q2() {
  Criterion c(2, "accept-set equality on odd composites < 1e4, liar fraction < 1/4");
  auto primes = primes_below(10000);
  std::set<std::uint64_t> prime_set(primes.begin(), primes.end());
  std::vector<std::uint64_t> targets;
  for (std::uint64_t n = 9; n < 10000; n += 2)
    if (!prime_set.count(n)) targets.push_back(n);

  std::atomic<std::size_t> mismatch_count{0};
  std::atomic<std::uint64_t> first_mismatch{0};
  std::atomic<std::uint64_t> fraction_violation{0};
  std::atomic<bool> subset_violation{false};
  parallel_for(targets.size(), [&](std::size_t i) {
    std::uint64_t n = targets[i];
    auto bob = primality::accept_census(n, primality::Tester::kBob);
    auto mr = primality::accept_census(n, primality::Tester::kStandard);
    if (bob != mr) {
      ++mismatch_count;
      std::uint64_t expected = first_mismatch.load();
      while ((expected == 0 || n < expected) &&
             !first_mismatch.compare_exchange_weak(expected, n)) {
      }
    }
    if (!std::includes(mr.begin(), mr.end(), bob.begin(), bob.end())) subset_violation = true;
    if (n > 9 && double(bob.size()) / double(n - 3) >= 0.25) fraction_violation = n;
  });

  c.require(!subset_violation.load(), "modified census not contained in classical census");
  c.require(fraction_violation.load() == 0,
            "liar fraction >= 1/4 at n=" + std::to_string(fraction_violation.load()));
  c.require(mismatch_count.load() == 0,
            "censuses differ for " + std::to_string(mismatch_count.load()) +
                " composites; first at n=" + std::to_string(first_mismatch.load()));
  if (mismatch_count.load() != 0) {
    c.note("the published equality claim does not hold: its proof splits");
    c.note("A^3-1 = (A-1)(A^2+A+1) and picks a factor, which needs n prime;");
    c.note("at n=91=7*13, base 22 (order 3) is accepted classically only --");
    c.note("the quadratic branch holds mod 7, the linear one mod 13, neither mod 91.");
    c.note("what does hold (and passes above): modified-accepts implies classical-accepts.");
  }
}

void criterion_3_cpa() {
  Criterion c(3, "both distinguishers win 1e4/1e4 sessions; blind baseline < 0.02");
  auto one = cbc::estimate_advantage(cbc::Strategy::kFirst, 10000, 20201, 16);
  auto two = cbc::estimate_advantage(cbc::Strategy::kSecond, 10000, 20202, 16);
  auto coin = cbc::estimate_advantage(cbc::Strategy::kCoinFlip, 10000, 20203);
  c.require(one.wins == 10000, "first distinguisher lost " + std::to_string(10000 - one.wins));
  c.require(one.abs_advantage() == 0.5, "first advantage not exactly 1/2");
  c.require(two.wins == 10000, "second distinguisher lost " + std::to_string(10000 - two.wins));
  c.require(two.abs_advantage() == 0.5, "second advantage not exactly 1/2");
  c.require(coin.abs_advantage() < 0.02,
            "blind baseline advantage " + std::to_string(coin.abs_advantage()));
}

void criterion_4_stairsbox() {
  Criterion c(4, "challenge decomposition: exactly 8 affine cores, all triples recompose");
  using namespace stairsbox;
  auto sbox = SBox64::from_values(
      std::vector<int>(verify::kChallengeSBox, verify::kChallengeSBox + 64));
  auto result = recover(sbox);
  c.require(!result.truncated, "challenge search unexpectedly truncated");
  std::set<std::pair<unsigned, unsigned>> got;
  for (const auto& x : x_candidates(result)) got.insert({x.a, x.b});
  std::set<std::pair<unsigned, unsigned>> expected = {{1, 1},  {1, 17},  {1, 33},  {1, 49},
                                                      {33, 1}, {33, 17}, {33, 33}, {33, 49}};
  c.require(got == expected, "X candidate set differs from the published eight");
  for (const auto& t : result.triples)
    c.require(compose(t.a, t.x, t.b) == sbox, "triple fails to recompose the table");
  c.note("triples found: " + std::to_string(result.triples.size()));

  Rng rng(404);
  std::atomic<int> failures{0};
  parallel_for(100, [&](std::size_t i) {
    Rng sub = rng.fork(i);
    LinearMap6 a, b;
    do {
      for (auto& row : a.rows) row = std::uint8_t(1 + sub.below(63));
    } while (!a.invertible());
    do {
      for (auto& row : b.rows) row = std::uint8_t(1 + sub.below(63));
    } while (!b.invertible());
    AffineModMap x{unsigned(1 + 2 * sub.below(32)), unsigned(sub.below(64))};
    SBox64 s = compose(a, x, b);
    auto rec = recover(s);
    bool ok = !rec.triples.empty();
    for (const auto& t : rec.triples) ok = ok && compose(t.a, t.x, t.b) == s;
    if (!ok) ++failures;
  });
  c.require(failures == 0,
            std::to_string(failures.load()) + "/100 random compositions failed round-trip");
}

void criterion_5_hidden_rsa() {
  Criterion c(5, "RSA constants exact; 20 self-generated instances fully attacked");
  using namespace hidden_rsa;
  BigInt n(constants::kModulus), p(constants::kPrimeP), q(constants::kPrimeQ);
  BigInt d(constants::kPrivateExponent), y(constants::kIntercepted);
  BigInt e(constants::kPublicExponent);
  c.require(p * q == n, "p*q != n");
  c.require((e * d) % ((p - 1) * (q - 1)) == 1, "e*d != 1 mod phi");
  c.require(rsa_decrypt(p, q, e, y) == constants::kPlainMessage,
            "decrypted challenge message mismatch");

  std::atomic<int> failures{0};
  Rng master(505);
  parallel_for(20, [&](std::size_t i) {
    Rng rng = master.fork(i);
    BigInt exponent = i % 2 == 0 ? 3 : 65537;
    auto inst = RsaInstance::generate(32, exponent, rng);
    Oracle oracle = [&](const BigInt& x) { return oracle_encrypt(inst, x); };
    auto rec = recover_public(oracle, 1 << 20, rng);
    if (!rec || rec->e != inst.e || rec->n != inst.n) {
      ++failures;
      return;
    }
    auto factors = factor_semiprime(rec->n);
    if (factors.first != inst.p || factors.second != inst.q) {
      ++failures;
      return;
    }
    BigInt message = BigInt(rng.next_u64()) % inst.n;
    if (rsa_decrypt(factors.first, factors.second, rec->e, oracle_encrypt(inst, message)) !=
        message)
      ++failures;
  });
  c.require(failures == 0, std::to_string(failures.load()) + "/20 instance attacks failed");
}

void criterion_6_orthomorphisms() {
  Criterion c(6, "exhaustive m=4 sweep: 256 orthomorphisms, both engines agree on 8^8 tuples");
  auto result = ortho::enumerate_orthomorphisms(4, true, false);
  c.require(result.predicate_count == 256,
            "predicate count " + std::to_string(result.predicate_count));
  c.require(result.bruteforce_count && *result.bruteforce_count == 256,
            "brute-force count " + std::to_string(result.bruteforce_count.value_or(0)));
  // enumerate_orthomorphisms throws if any tuple disagrees; reaching here
  // means zero disagreements across all 8^8 tuples

  Rng rng(606);
  std::uint64_t disagreements = 0;
  for (int i = 0; i < 100000; ++i) {
    ortho::ThetaParams p;
    p.m = 5;
    p.r1 = unsigned(rng.below(16));
    p.r2 = unsigned(rng.below(16));
    p.q1 = unsigned(rng.below(16));
    p.q2 = unsigned(rng.below(16));
    p.b1 = unsigned(rng.below(16));
    p.b2 = unsigned(rng.below(16));
    p.c1 = unsigned(rng.below(16));
    p.c2 = unsigned(rng.below(16));
    if (ortho::theorem_predicate(p) != ortho::is_orthomorphism_bruteforce(p)) ++disagreements;
  }
  c.require(disagreements == 0,
            std::to_string(disagreements) + " m=5 sampled disagreements");
}

void criterion_7_jpeg() {
  Criterion c(7, "codec: 91-bit worked example, round-trip exactness, prefix-freeness");
  using namespace jpeg;
  std::array<std::int64_t, 64> zz;
  for (int i = 0; i < 64; ++i) zz[i] = verify::kWorkedZigzag[i];
  QuantMatrix worked = unzigzag(zz);
  c.require(encode_matrix(worked).to_string() == verify::kWorkedBits,
            "worked matrix does not emit the published 91 bits");
  c.require(expgolomb_encode(47).to_string() == "1111110101111", "codeword for 47 differs");

  Rng rng(707);
  int roundtrip_failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    QuantMatrix m{};
    std::size_t nonzeros = rng.below(24);
    for (std::size_t i = 0; i < nonzeros; ++i)
      m[rng.below(8)][rng.below(8)] = std::int64_t(rng.below(10001)) - 5000;
    if (decode_matrix(encode_matrix(m)) != m) ++roundtrip_failures;
  }
  c.require(roundtrip_failures == 0,
            std::to_string(roundtrip_failures) + "/10000 round-trips failed");

  bool prefix_free = true;
  BitString suffix = BitString::from_string("1100");
  for (std::int64_t v = -65536; v <= 65536 && prefix_free; ++v) {
    BitString code = expgolomb_encode(v);
    BitString stream = code.concat(suffix);
    std::size_t pos = 0;
    prefix_free = expgolomb_decode(stream, pos) == v && pos == code.size();
  }
  c.require(prefix_free, "codewords are not self-delimiting over |v| <= 2^16");
  c.note("data-gated: official corpus total (6694303 bits) checked only via "
         "verify-paper --corpus");
}

void criterion_8_hash() {
  Criterion c(8, "hash attacks verified by re-hash: 1e3 instances, zero failures");
  using namespace hashh;
  for (std::size_t n : {16u, 32u, 256u}) {
    RandomFunction f(n, 808 + n);
    HashParams params{n, [&f](const BitString& x) { return f(x); }};
    Rng rng(809 + n);
    int zero_failures = 0;
    for (int i = 0; i < 100; ++i) {
      BitString x = rng.bits(n);
      if (!hash(params, x.concat(f(x))).is_zero()) ++zero_failures;
    }
    c.require(zero_failures == 0, "H(x||f(x)) != 0 at n=" + std::to_string(n));
  }

  std::atomic<int> prepend_failures{0}, append_failures{0}, linear_failures{0},
      solver_failures{0};
  Rng master(810);
  parallel_for(1000, [&](std::size_t i) {
    Rng rng = master.fork(i);
    RandomFunction f(16, rng.next_u64());
    HashParams params{16, [&f](const BitString& x) { return f(x); }};
    auto store = PairStore::sample(f, 160, rng);
    BitString m = rng.bits(16 * (1 + rng.below(6)));
    BitString digest = hash(params, m);

    BitString pre = second_preimage_prepend(store, m, rng.below(store.size()));
    if (pre == m || hash(params, pre) != digest) ++prepend_failures;

    BitString app = second_preimage_append(store, m, digest, rng.below(store.size()));
    if (app == m || hash(params, app) != digest) ++append_failures;

    auto lin = second_preimage_linear(store, m, digest);
    if (!lin.success)
      ++solver_failures;
    else if (lin.preimage == m || hash(params, lin.preimage) != digest)
      ++linear_failures;
  });
  c.require(prepend_failures == 0, std::to_string(prepend_failures.load()) + " prepend failures");
  c.require(append_failures == 0, std::to_string(append_failures.load()) + " append failures");
  c.require(solver_failures == 0,
            std::to_string(solver_failures.load()) + " linear-solver failures (budget 0)");
  c.require(linear_failures == 0,
            std::to_string(linear_failures.load()) + " linear verify failures");
  c.note("data-gated: official 512-value f table checked only via verify-paper --ftable;");
  c.note("the printed f(0) reproduction of the worked preimage runs in the unit suite");
}

void criterion_9_gf128() {
  Criterion c(9, "field engine: oracle cross-check, small-field roots, Frobenius");
  Rng rng(909);
  int mul_mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    gf2::Gf128 a{rng.next_u64(), rng.next_u64()}, b{rng.next_u64(), rng.next_u64()};
    if (gf2::gf_mul(a, b) != testing::oracle_mul(a, b)) ++mul_mismatches;
  }
  c.require(mul_mismatches == 0,
            std::to_string(mul_mismatches) + "/1000 products disagree with the bit-serial oracle");

  int root_mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint8_t> coeffs(2 + rng.below(24));
    for (auto& cc : coeffs) cc = std::uint8_t(rng.next_u64());
    gf2::Poly<gf2::Gf8Field> poly(coeffs);
    if (poly.degree() < 1) continue;
    auto roots = gf2::find_roots(poly, rng);
    std::set<int> got(roots.begin(), roots.end());
    std::set<int> expected;
    for (int x = 0; x < 256; ++x)
      if (poly.eval(std::uint8_t(x)) == 0) expected.insert(x);
    if (got != expected) ++root_mismatches;
  }
  c.require(root_mismatches == 0,
            std::to_string(root_mismatches) + " GF(2^8) root sets differ from exhaustive search");

  int frobenius_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    gf2::Gf128 h{rng.next_u64(), rng.next_u64()};
    if (gf2::gf_pow2k(h, 128) != h) ++frobenius_failures;
  }
  c.require(frobenius_failures == 0,
            std::to_string(frobenius_failures) + " Frobenius fixed-point failures");
}

void criterion_10_gcm() {
  Criterion c(10, "forbidden attack end-to-end on 50 keys: H recovered, forgeries accepted");
  using namespace gcm;
  using gf2::Gf128;
  std::atomic<int> pair_failures{0}, triple_failures{0}, forge_failures{0};
  Rng master(1010);
  parallel_for(50, [&](std::size_t i) {
    Rng rng = master.fork(i);
    Key256 key{};
    for (auto& b : key) b = std::uint8_t(rng.next_u64());
    Aes256 cipher(key);
    Gf128 true_h = Gf128::from_block(cipher.encrypt_block(Block{}).data());

    Header header{};
    Iv iv{};
    for (auto& b : header) b = std::uint8_t(rng.next_u64());
    for (auto& b : iv) b = std::uint8_t(rng.next_u64());

    auto bytes = [&](std::size_t len) {
      std::vector<std::uint8_t> v(len);
      for (auto& b : v) b = std::uint8_t(rng.next_u64());
      return v;
    };

    // known AAD, same IV
    auto aad = build_aad(header, iv);
    auto r1 = gcm_seal(cipher, header, iv, bytes(33 + rng.below(32)), aad);
    auto r2 = gcm_seal(cipher, header, iv, bytes(33 + rng.below(32)), aad);
    auto candidates = recover_h_from_pair(r1, r2, AadMode::kHeaderIv, rng);
    bool contains = false;
    for (const auto& cand : candidates) contains = contains || cand.h == true_h;
    if (!contains) ++pair_failures;

    auto kept = filter_candidates({r1, r2}, AadMode::kHeaderIv, candidates);
    bool forged_ok = false;
    for (const auto& cand : kept) {
      auto tampered = r1.payload;
      tampered[rng.below(tampered.size())] ^= std::uint8_t(1 + rng.below(255));
      auto forged = forge(r1, tampered, cand.h, cand.tag_base);
      forged_ok = forged_ok || gcm_open(cipher, forged, aad).has_value();
    }
    if (!forged_ok) ++forge_failures;

    // secret AAD suffix, equal shapes
    std::array<std::uint8_t, 8> secret{};
    for (auto& b : secret) b = std::uint8_t(rng.next_u64());
    auto secret_aad = build_aad(header, iv, secret);
    std::size_t len = 32 + rng.below(32);
    auto t1 = gcm_seal(cipher, header, iv, bytes(len), secret_aad);
    auto t2 = gcm_seal(cipher, header, iv, bytes(len), secret_aad);
    auto t3 = gcm_seal(cipher, header, iv, bytes(len), secret_aad);
    auto hs = recover_h_from_triple(t1, t2, t3, rng);
    if (hs.size() != 1 || hs[0] != true_h) {
      ++triple_failures;
    } else {
      auto tampered = t1.payload;
      tampered[rng.below(tampered.size())] ^= 0x20;
      auto forged = reforge_same_shape(t1, tampered, hs[0], AadMode::kHeaderIvSecret);
      if (!gcm_open(cipher, forged, secret_aad).has_value()) ++forge_failures;
    }
  });
  c.require(pair_failures == 0,
            std::to_string(pair_failures.load()) + "/50 pair recoveries missed the true H");
  c.require(triple_failures == 0,
            std::to_string(triple_failures.load()) + "/50 triple recoveries not unique/true");
  c.require(forge_failures == 0, std::to_string(forge_failures.load()) + " forgery rejections");
  c.note("published H values for the two tampering tasks are serializer round-trip");
  c.note("checks (unit suite + verify-paper); attack-level reproduction is data-gated");
}

void criterion_11_bases() {
  Criterion c(11, "constructed product families are bases for every (s,d) with r <= 32");
  using namespace f2;
  int checked = 0;
  for (std::size_t s = 2; s <= 32; ++s)
    for (std::size_t d = 2; d <= s; ++d) {
      std::size_t r = basis_dimension(s, d);
      if (r > 32) continue;
      ++checked;
      if (!is_basis_family(construct_basis_family(s, d)))
        c.require(false, "construction fails at s=" + std::to_string(s) +
                             ", d=" + std::to_string(d));
    }
  c.note("parameter pairs checked: " + std::to_string(checked));

  BasisFamily example{2, 2, 4,
                      {BitString::from_string("1100"), BitString::from_string("0110")}};
  auto products = componentwise_products(example);
  std::string got;
  for (const auto& p : products) got += p.to_string() + " ";
  c.require(got == "1111 1100 0110 0100 ", "worked product set differs: " + got);
  c.require(is_basis_family(example), "worked family not recognized as a basis family");
}

void criterion_12_puzzles() {
  Criterion c(12, "puzzle answers exact (invariant 152, house residue, parity, POLY, BFS)");
  using namespace puzzles;
  c.require(rgb_invariant({20, 20}) == 152, "boot invariant != 152");
  c.require(!rgb_can_crash({20, 20}), "(0,0) reachable from (20,20)");
  c.require(winston_reachable(2020, 1984), "2020 -> 1984 not reachable");
  c.require(!winston_reachable(2020, 2021), "2020 -> 2021 wrongly reachable");
  c.require(!poly_consistent({{20, 7}, {15, 5}}), "POLY sample wrongly consistent");
  std::uint64_t house = modpow<std::uint64_t>(3, 40231, 5);
  c.require(house == 4, "house residue: published 4, computed " + std::to_string(house));
  if (house != 4) {
    c.note("the published solution reduces 3^40231 to 3^3 mod 5 (40231 = 4*10057 + 3)");
    c.note("but 3^3 = 27 = 2 (mod 5); its final digit contradicts its own chain,");
    c.note("so the assertion is kept as stated and fails against a correct modpow.");
  }
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion_1_primality_q1();
  criterion_2_primality_q2();
  criterion_3_cpa();
  criterion_4_stairsbox();
  criterion_5_hidden_rsa();
  criterion_6_orthomorphisms();
  criterion_7_jpeg();
  criterion_8_hash();
  criterion_9_gf128();
  criterion_10_gcm();
  criterion_11_bases();
  criterion_12_puzzles();
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%d/12 criteria passed in %.1fs\n", 12 - g_failures, secs);
  if (g_failures)
    std::printf("failing criteria assert published values that recomputation contradicts; "
                "see the per-criterion notes above\n");
  return g_failures == 0 ? 0 : 1;
}
