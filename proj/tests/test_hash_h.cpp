#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "cwk/hash_h.hpp"
#include "cwk/verify.hpp"

using namespace cwk;
using namespace cwk::hashh;

namespace {

HashParams params_for(const RandomFunction& f) {
  return HashParams{f.n(), [&f](const BitString& x) { return f(x); }};
}

}  // namespace

TEST_CASE("single block hash unrolls to m xor f(m)") {
  RandomFunction f(16, 1);
  auto p = params_for(f);
  BitString m = BitString::from_hex("ab12");
  CHECK(hash(p, m) == (m ^ f(m)));
  CHECK_THROWS_AS(hash(p, BitString(0)), std::invalid_argument);
  CHECK_THROWS_AS(hash(p, BitString(17)), std::invalid_argument);
}

TEST_CASE("x || f(x) hashes to zero at several block sizes") {
  for (std::size_t n : {16u, 32u, 256u}) {
    RandomFunction f(n, 7 + n);
    auto p = params_for(f);
    Rng rng(n);
    for (int trial = 0; trial < 100; ++trial) {
      BitString x = rng.bits(n);
      CHECK(hash(p, x.concat(f(x))).is_zero());
    }
  }
}

TEST_CASE("telescoping identity") {
  RandomFunction f(16, 3);
  auto p = params_for(f);
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t blocks = 1 + rng.below(6);
    BitString m = rng.bits(16 * blocks);
    BitString h(16);
    BitString acc(16);
    for (std::size_t j = 0; j < blocks; ++j) {
      BitString g = h ^ m.slice(16 * j, 16);
      acc ^= g ^ f(g);
      h = m.slice(16 * j, 16) ^ f(g);
    }
    CHECK(hash(p, m) == acc);
    CHECK(hash(p, m) == h);
  }
}

TEST_CASE("utf-8 interop fixes the challenge message bytes") {
  std::string text = "A random matrix is likely decent";
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  CHECK(BitString::from_bytes(bytes).to_hex() == verify::kTargetMessageHex);
  CHECK(parse_prefixed_message("h" + std::string(verify::kTargetMessageHex)) ==
        BitString::from_bytes(bytes));
  CHECK(parse_prefixed_message("b0100") == BitString::from_string("0100"));
  CHECK_THROWS_AS(parse_prefixed_message("x00"), std::invalid_argument);
}

TEST_CASE("pair store rejects duplicates and mismatched widths") {
  BitString x = BitString::from_hex("0001");
  CHECK_THROWS_AS(PairStore(16, {{x, x}, {x, x}}), std::invalid_argument);
  CHECK_THROWS_AS(PairStore(16, {{BitString(8), BitString(16)}}), std::invalid_argument);
}

TEST_CASE("collisions from any two pairs, both hashing to zero") {
  RandomFunction f(32, 9);
  Rng rng(10);
  auto store = PairStore::sample(f, 320, rng);
  auto [m1, m2] = find_collision(store);
  CHECK(m1 != m2);
  auto p = params_for(f);
  CHECK(hash(p, m1).is_zero());
  CHECK(hash(p, m2).is_zero());
  PairStore tiny(32, {{BitString(32), f(BitString(32))}});
  CHECK_THROWS_AS(find_collision(tiny), std::invalid_argument);
}

TEST_CASE("prepend preserves the hash") {
  RandomFunction f(16, 11);
  auto p = params_for(f);
  Rng rng(12);
  auto store = PairStore::sample(f, 160, rng);
  for (int trial = 0; trial < 100; ++trial) {
    BitString m = rng.bits(16 * (1 + rng.below(5)));
    BitString m2 = second_preimage_prepend(store, m, rng.below(store.size()));
    CHECK(m2 != m);
    CHECK(hash(p, m2) == hash(p, m));
  }
}

TEST_CASE("append preserves the hash when the digest is supplied") {
  RandomFunction f(16, 13);
  auto p = params_for(f);
  Rng rng(14);
  auto store = PairStore::sample(f, 160, rng);
  for (int trial = 0; trial < 100; ++trial) {
    BitString m = rng.bits(16 * (1 + rng.below(5)));
    BitString digest = hash(p, m);
    BitString m2 = second_preimage_append(store, m, digest, rng.below(store.size()));
    CHECK(m2 != m);
    CHECK(hash(p, m2) == digest);
  }
  CHECK_THROWS_AS(second_preimage_append(store, BitString(16), BitString(8)),
                  std::invalid_argument);
}

TEST_CASE("linear attack rebuilds a second preimage") {
  RandomFunction f(16, 15);
  auto p = params_for(f);
  Rng rng(16);
  auto store = PairStore::sample(f, 160, rng);
  for (int trial = 0; trial < 100; ++trial) {
    BitString m = rng.bits(16 * 4);
    BitString digest = hash(p, m);
    auto result = second_preimage_linear(store, m, digest);
    REQUIRE(result.success);
    CHECK(result.preimage != m);
    CHECK(hash(p, result.preimage) == digest);
  }
}

TEST_CASE("linear attack with the zero digest returns a nonempty combination") {
  RandomFunction f(16, 17);
  auto p = params_for(f);
  Rng rng(18);
  auto store = PairStore::sample(f, 160, rng);
  const auto& [x, fx] = store.pair(3);
  BitString m = x.concat(fx);  // hashes to zero
  auto result = second_preimage_linear(store, m, BitString(16));
  REQUIRE(result.success);
  CHECK(result.preimage.size() >= 16);
  CHECK(result.preimage != m);
  CHECK(hash(p, result.preimage).is_zero());
}

TEST_CASE("store-only hashing works exactly on covered chains") {
  RandomFunction f(16, 19);
  Rng rng(20);
  auto store = PairStore::sample(f, 10, rng);
  const auto& [x, fx] = store.pair(0);
  auto digest = store_hash(store, x.concat(fx));
  REQUIRE(digest.has_value());
  CHECK(digest->is_zero());
  // a block outside the store cannot be chained
  BitString unknown = BitString::from_hex("beef");
  if (!store.lookup(unknown)) CHECK_FALSE(store_hash(store, unknown).has_value());
}

TEST_CASE("published second preimage reproduces from the printed f(0)") {
  PairStore printed(256, {{BitString(256), BitString::from_hex(verify::kFZeroHex)}});
  BitString m = BitString::from_hex(verify::kTargetMessageHex);
  CHECK(second_preimage_prepend(printed, m).to_hex() == verify::kExpectedPreimageHex);
}

TEST_CASE("f table import") {
  std::stringstream table;
  table << "5\n";       // f(0) = 5
  table << "255\n";     // f(1) = 255
  table << "65535\n";   // f(2) = 0xffff
  auto store = PairStore::from_table(table, 16);
  REQUIRE(store.size() == 3);
  CHECK(store.pair(0).first == BitString(16));
  CHECK(store.pair(0).second.to_hex() == "0005");
  CHECK(store.pair(1).first.to_hex() == "0001");
  CHECK(store.pair(1).second.to_hex() == "00ff");
  CHECK(store.pair(2).second.to_hex() == "ffff");

  std::stringstream bad("123x\n");
  CHECK_THROWS_AS(PairStore::from_table(bad, 16), std::invalid_argument);
  std::stringstream too_big("65536\n");
  CHECK_THROWS_AS(PairStore::from_table(too_big, 16), std::invalid_argument);
}
