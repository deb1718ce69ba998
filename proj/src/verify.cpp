#include "cwk/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

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

namespace cwk::verify {

const int kChallengeSBox[64] = {
    13, 18, 20, 55, 23, 24, 34, 1,  62, 49, 11, 40, 36, 59, 61, 30,  //
    33, 46, 56, 27, 41, 52, 14, 45, 0,  29, 39, 4,  8,  7,  17, 50,  //
    2,  54, 12, 47, 35, 44, 58, 25, 10, 5,  19, 48, 43, 31, 37, 6,   //
    21, 26, 32, 3,  15, 16, 22, 53, 38, 57, 63, 28, 60, 51, 9,  42};

const char* const kTask2HashKey =
    "a^126 + a^125 + a^122 + a^120 + a^119 + a^116 + a^114 + a^111 + a^110 + a^107 + a^99 + "
    "a^96 + a^95 + a^94 + a^93 + a^92 + a^90 + a^89 + a^87 + a^85 + a^84 + a^83 + a^82 + a^81 + "
    "a^80 + a^78 + a^76 + a^73 + a^67 + a^66 + a^62 + a^61 + a^60 + a^59 + a^56 + a^53 + a^52 + "
    "a^49 + a^47 + a^45 + a^40 + a^39 + a^38 + a^37 + a^36 + a^35 + a^34 + a^33 + a^29 + a^28 + "
    "a^24 + a^22 + a^21 + a^19 + a^18 + a^17 + a^16 + a^14 + a^11 + a^10 + a^9 + a^6 + a^4 + "
    "a^2";

const char* const kTask3HashKey =
    "a^123 + a^122 + a^112 + a^110 + a^107 + a^102 + a^100 + a^99 + a^97 + a^96 + a^95 + a^92 + "
    "a^90 + a^87 + a^85 + a^83 + a^82 + a^81 + a^78 + a^77 + a^74 + a^73 + a^71 + a^70 + a^65 + "
    "a^63 + a^62 + a^60 + a^59 + a^58 + a^57 + a^54 + a^53 + a^50 + a^49 + a^47 + a^45 + a^43 + "
    "a^42 + a^41 + a^37 + a^36 + a^32 + a^30 + a^28 + a^23 + a^13 + a^12 + a^10 + a^7 + a^5 + "
    "a^3 + 1";

const char* const kFZeroHex =
    "ff1282609f458d732888e2736fd1b98cc36f809b1c116e77015b8d7d4d8996ae";
const char* const kTargetMessageHex =
    "412072616e646f6d206d6174726978206973206c696b656c7920646563656e74";
const char* const kExpectedPreimageHex =
    "0000000000000000000000000000000000000000000000000000000000000000"
    "ff1282609f458d732888e2736fd1b98cc36f809b1c116e77015b8d7d4d8996ae"
    "412072616e646f6d206d6174726978206973206c696b656c7920646563656e74";

const long long kWorkedZigzag[64] = {47, 9, -12, 3, 10, 2, 0, -1, -5, 1, -2, -1, 1, -4, 1, 0,
                                     0,  0, 0,   0, 0,  0, 0, 0,  0,  0, 0,  0,  0, 0,  0, 0,
                                     0,  0, 0,   0, 0,  0, 0, 0,  0,  0, 0,  0,  0, 0,  0, 0,
                                     0,  0, 0,   0, 0,  0, 0, 0,  0,  0, 0,  0,  0, 0,  0, 0};

const char* const kWorkedBits =
    "001110"
    "1111110101111"  // 47
    "111101001"      // 9
    "111100100"      // -12
    "11011"          // 3
    "111101010"      // 10
    "11010"          // 2
    "0"              // 0
    "100"            // -1
    "1110001"        // -5
    "101"            // 1
    "11000"          // -2
    "100"            // -1
    "101"            // 1
    "1110000"        // -4
    "101";           // 1

namespace {

using report::RunReport;

std::string bytes_to_ascii(const std::vector<std::uint8_t>& bytes) {
  std::string s;
  for (auto b : bytes) s += (b >= 0x20 && b < 0x7f) ? char(b) : '.';
  return s;
}

void verify_puzzles(RunReport& rep) {
  using namespace puzzles;
  rep.check("rgb.invariant(20,20)", "152", std::to_string(rgb_invariant({20, 20})));
  rep.check("rgb.invariant(1,18)", "1", std::to_string(rgb_invariant({1, 18})));
  rep.check("rgb.crash-unreachable", !rgb_can_crash({20, 20}));
  // The published answer is 4, but 40231 = 4*10057 + 3 and 3^3 = 27 = 2 (mod 5);
  // the solution's own reduction chain yields 2. Reported as a failing check on
  // purpose: recomputation contradicts the printed constant.
  rep.result("house.note", "published value 4 contradicts its own derivation; 3^3 mod 5 = 2");
  rep.check("house.3^40231 mod 5 (published: 4)", "4",
            std::to_string(modpow<std::uint64_t>(3, 40231, 5)));
  rep.check("winston.2020->1984", winston_reachable(2020, 1984));
  rep.check("winston.2020->2021-impossible", !winston_reachable(2020, 2021));
  rep.check("poly.(20,7),(15,5)-inconsistent", !poly_consistent({{20, 7}, {15, 5}}));
}

void verify_primality(RunReport& rep) {
  using namespace primality;
  bool all_pp = true;
  for (std::uint64_t a = 2; a <= 11; ++a)
    all_pp = all_pp && bob_test(13, a).value == Outcome::kProbablyPrime;
  rep.check("primality.bob-accepts-prime-13", all_pp);
  rep.check("primality.census-equal-n25",
            accept_census(25, Tester::kBob) == accept_census(25, Tester::kStandard));
  rep.check("primality.2047-strong-liar",
            bob_test(2047, 2).value == Outcome::kProbablyPrime &&
                standard_mr(2047, 2).value == Outcome::kProbablyPrime);
}

void verify_cpa(RunReport& rep, std::uint64_t seed, std::uint64_t trials) {
  auto first = cbc::estimate_advantage(cbc::Strategy::kFirst, trials, seed);
  auto second = cbc::estimate_advantage(cbc::Strategy::kSecond, trials, seed + 1);
  rep.check("cpa.adversary-one-wins", std::to_string(trials), std::to_string(first.wins));
  rep.check("cpa.adversary-two-wins", std::to_string(trials), std::to_string(second.wins));
}

void verify_stairsbox(RunReport& rep) {
  using namespace stairsbox;
  auto sbox = SBox64::from_values(std::vector<int>(kChallengeSBox, kChallengeSBox + 64));
  auto result = recover(sbox);
  auto xs = x_candidates(result);
  std::set<std::pair<unsigned, unsigned>> got;
  for (const auto& x : xs) got.insert({x.a, x.b});
  std::set<std::pair<unsigned, unsigned>> expected = {{1, 1},  {1, 17},  {1, 33},  {1, 49},
                                                      {33, 1}, {33, 17}, {33, 33}, {33, 49}};
  std::string got_str;
  for (auto [a, b] : got) got_str += std::to_string(a) + "x+" + std::to_string(b) + " ";
  rep.result("stairsbox.triples", std::to_string(result.triples.size()));
  rep.check("stairsbox.x-candidates", got == expected);
  rep.result("stairsbox.x-set", got_str);
  bool recompose = !result.triples.empty();
  for (const auto& t : result.triples) recompose = recompose && compose(t.a, t.x, t.b) == sbox;
  rep.check("stairsbox.recompose", recompose);
  auto stairs = staircase_degrees(sbox);
  std::string stair_str;
  bool under_bound = true;
  const int bound[6] = {1, 2, 3, 4, 5, 5};
  for (int i = 0; i < 6; ++i) {
    stair_str += std::to_string(stairs[i]);
    under_bound = under_bound && stairs[i] <= bound[i];
  }
  rep.result("stairsbox.staircase-profile", stair_str);
  rep.check("stairsbox.staircase-bounded-by-123455", under_bound);
}

void verify_hidden_rsa(RunReport& rep) {
  using namespace hidden_rsa;
  BigInt n(constants::kModulus), p(constants::kPrimeP), q(constants::kPrimeQ);
  BigInt d(constants::kPrivateExponent), y(constants::kIntercepted);
  BigInt e(constants::kPublicExponent);
  rep.check("rsa.p*q=n", p * q == n);
  rep.check("rsa.e*d=1 mod phi", (e * d) % ((p - 1) * (q - 1)) == 1);
  rep.check("rsa.d-matches-inverse", private_exponent(p, q, e) == d);
  rep.check("rsa.decrypted-message", std::to_string(constants::kPlainMessage),
            rsa_decrypt(p, q, e, y).str());
}

void verify_ortho(RunReport& rep, bool quick) {
  auto result = ortho::enumerate_orthomorphisms(4, false, false);
  rep.check("ortho.count-m4", "256", std::to_string(result.predicate_count));
  // spot agreement between the closed form and brute force
  Rng rng(99);
  bool agree = true;
  std::uint64_t samples = quick ? 2000 : 20000;
  for (std::uint64_t i = 0; i < samples; ++i) {
    ortho::ThetaParams p;
    p.m = 4;
    p.r1 = unsigned(rng.below(8)); p.r2 = unsigned(rng.below(8));
    p.q1 = unsigned(rng.below(8)); p.q2 = unsigned(rng.below(8));
    p.b1 = unsigned(rng.below(8)); p.b2 = unsigned(rng.below(8));
    p.c1 = unsigned(rng.below(8)); p.c2 = unsigned(rng.below(8));
    agree = agree && ortho::theorem_predicate(p) == ortho::is_orthomorphism_bruteforce(p);
  }
  rep.check("ortho.theorem-agrees-sampled", agree);
}

void verify_jpeg(RunReport& rep, const std::optional<std::string>& corpus_path) {
  using namespace jpeg;
  std::array<std::int64_t, 64> zz;
  for (int i = 0; i < 64; ++i) zz[i] = kWorkedZigzag[i];
  QuantMatrix worked = unzigzag(zz);
  rep.check("jpeg.worked-91-bits", kWorkedBits, encode_matrix(worked).to_string());
  rep.check("jpeg.decode-inverse", decode_matrix(BitString::from_string(kWorkedBits)) == worked);
  rep.check("jpeg.codeword-47", "1111110101111", expgolomb_encode(47).to_string());
  rep.check("jpeg.codeword-0", "0", expgolomb_encode(0).to_string());
  if (corpus_path) {
    std::ifstream in(*corpus_path);
    if (!in) {
      rep.check("jpeg.corpus-baseline", "readable corpus", "cannot open " + *corpus_path);
    } else {
      auto stats = corpus_stats(parse_corpus(in));
      rep.result("jpeg.corpus-matrices", std::to_string(stats.matrices));
      rep.check("jpeg.corpus-baseline", std::to_string(kCorpusBaselineBits),
                std::to_string(stats.total_bits));
    }
  } else {
    rep.skip("jpeg.corpus-baseline", "official matrix corpus not supplied (--corpus)");
  }
}

void verify_hash(RunReport& rep, const VerifyOptions& options) {
  using namespace hashh;
  // the worked second preimage needs only the printed f(0)
  BitString f0 = BitString::from_hex(kFZeroHex);
  PairStore printed(256, {{BitString(256), f0}});
  BitString message = BitString::from_hex(kTargetMessageHex);
  rep.check("hash.preimage-from-printed-f0", kExpectedPreimageHex,
            second_preimage_prepend(printed, message).to_hex());
  auto zero_digest = store_hash(printed, BitString(256).concat(f0));
  rep.check("hash.x||f(x)-hashes-to-zero", zero_digest && zero_digest->is_zero());

  if (options.ftable_path) {
    std::ifstream in(*options.ftable_path);
    if (!in) {
      rep.check("hash.preimage-from-table", "readable table", "cannot open " + *options.ftable_path);
      return;
    }
    PairStore table = PairStore::from_table(in, 256);
    rep.result("hash.table-entries", std::to_string(table.size()));
    auto f0_table = table.lookup(BitString(256));
    rep.check("hash.table-f0-matches-printed", f0_table && *f0_table == f0);
    rep.check("hash.preimage-from-table", kExpectedPreimageHex,
              second_preimage_prepend(table, message).to_hex());
  } else {
    rep.skip("hash.preimage-from-table", "official 512-value f table not supplied (--ftable)");
  }
}

void verify_gcm(RunReport& rep, const VerifyOptions& options) {
  using gf2::Gf128;
  // published GHASH keys survive a serializer round trip
  rep.check("gcm.task2-H-roundtrip", kTask2HashKey,
            Gf128::from_power_sum(kTask2HashKey).to_power_sum());
  rep.check("gcm.task3-H-roundtrip", kTask3HashKey,
            Gf128::from_power_sum(kTask3HashKey).to_power_sum());

  // end-to-end forbidden attack on a fresh transcript
  Rng rng(options.seed);
  gcm::Key256 key{};
  for (auto& b : key) b = std::uint8_t(rng.next_u64());
  gcm::Aes256 cipher(key);
  gcm::Header header{'v', 'e', 'r', 'i', 'f', 'y', '0', '1'};
  gcm::Iv iv{};
  for (auto& b : iv) b = std::uint8_t(rng.next_u64());
  auto aad = gcm::build_aad(header, iv);
  std::vector<std::uint8_t> p1(33), p2(33);
  for (auto& b : p1) b = std::uint8_t(rng.next_u64());
  for (auto& b : p2) b = std::uint8_t(rng.next_u64());
  auto r1 = gcm::gcm_seal(cipher, header, iv, p1, aad);
  auto r2 = gcm::gcm_seal(cipher, header, iv, p2, aad);
  auto candidates = gcm::recover_h_from_pair(r1, r2, gcm::AadMode::kHeaderIv, rng);
  Gf128 true_h = Gf128::from_block(cipher.encrypt_block(gcm::Block{}).data());
  bool contains = false;
  for (const auto& c : candidates) contains = contains || c.h == true_h;
  rep.check("gcm.pair-recovery-contains-H", contains);
  auto filtered = gcm::filter_candidates({r1, r2}, gcm::AadMode::kHeaderIv, candidates);
  bool forged_ok = false;
  for (const auto& c : filtered) {
    auto tampered = r1.payload;
    tampered[0] ^= 1;  // flip one payload bit, re-tag
    auto forged = gcm::forge(r1, tampered, c.h, c.tag_base);
    forged_ok = forged_ok || gcm::gcm_open(cipher, forged, aad).has_value();
  }
  rep.check("gcm.forged-record-accepted", forged_ok);

  if (options.task1_dir) {
    namespace fs = std::filesystem;
    auto read_record = [&](int index) -> std::optional<gcm::GcmRecord> {
      fs::path path = fs::path(*options.task1_dir) / (std::to_string(index) + ".message");
      std::ifstream in(path, std::ios::binary);
      if (!in) return std::nullopt;
      std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                      std::istreambuf_iterator<char>());
      return gcm::GcmRecord::parse(bytes);
    };
    auto m0 = read_record(0);
    auto m5 = read_record(5);
    if (m0 && m5) {
      std::string crib = "Hello, Bob! How's everything?";
      std::vector<std::uint8_t> crib_bytes(crib.begin(), crib.end());
      auto plain = gcm::keystream_reuse_decrypt(*m0, crib_bytes, *m5);
      rep.check("gcm.task1-message5", "Lincoln Park, 10:15.", bytes_to_ascii(plain));
    } else {
      rep.check("gcm.task1-message5", "0.message and 5.message present", "files missing");
    }
  } else {
    rep.skip("gcm.task1-message5", "official Task_1 directory not supplied (--task1)");
  }
}

void verify_bases(RunReport& rep) {
  using namespace f2;
  BasisFamily example{2, 2, 4,
                      {BitString::from_string("1100"), BitString::from_string("0110")}};
  auto products = componentwise_products(example);
  std::string got;
  for (const auto& p : products) got += p.to_string() + " ";
  rep.check("bases.example-products", "1111 1100 0110 0100 ", got);
  rep.check("bases.example-is-basis", is_basis_family(example));
  rep.check("bases.construct-3-3", is_basis_family(construct_basis_family(3, 3)));
  std::uint64_t perms = 1;  // (2^3)! column permutations of the s = d = 3 matrix
  for (std::uint64_t i = 2; i <= 8; ++i) perms *= i;
  rep.check("bases.column-permutations-(2^3)!", "40320", std::to_string(perms));
}

}  // namespace

report::RunReport verify_paper_answers(const VerifyOptions& options) {
  RunReport rep;
  rep.subcommand = "verify-paper";
  rep.param("seed", std::to_string(options.seed));
  verify_puzzles(rep);
  verify_primality(rep);
  verify_cpa(rep, options.seed, options.quick ? 100 : 500);
  verify_stairsbox(rep);
  verify_hidden_rsa(rep);
  verify_ortho(rep, options.quick);
  verify_jpeg(rep, options.corpus_path);
  verify_hash(rep, options);
  verify_gcm(rep, options);
  verify_bases(rep);
  return rep;
}

}  // namespace cwk::verify
