#include <doctest.h>

#include <stdexcept>

#include "cwk/orthomorph.hpp"
#include "cwk/rng.hpp"

using namespace cwk;
using namespace cwk::ortho;

namespace {

ThetaParams random_params(unsigned m, Rng& rng) {
  unsigned mod = 1u << (m - 1);
  ThetaParams p;
  p.m = m;
  p.r1 = unsigned(rng.below(mod));
  p.r2 = unsigned(rng.below(mod));
  p.q1 = unsigned(rng.below(mod));
  p.q2 = unsigned(rng.below(mod));
  p.b1 = unsigned(rng.below(mod));
  p.b2 = unsigned(rng.below(mod));
  p.c1 = unsigned(rng.below(mod));
  p.c2 = unsigned(rng.below(mod));
  return p;
}

std::vector<DihedralElement> all_elements(unsigned m) {
  std::vector<DihedralElement> out;
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < (1u << (m - 1)); ++i) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("group presentation relations") {
  unsigned m = 4;
  DihedralElement a{1, 0}, u{0, 1};
  CHECK(group_mul(u, a, m) == DihedralElement{7, 1});  // u a = a^-1 u
  CHECK(group_mul(u, u, m) == DihedralElement{0, 0});  // u^2 = e
  DihedralElement a_pow{1, 0};
  for (int i = 1; i < 8; ++i) a_pow = group_mul(a_pow, a, m);
  CHECK(a_pow == DihedralElement{0, 0});  // a^(2^(m-1)) = e

  for (auto x : all_elements(m)) {
    CHECK(group_mul(x, group_inv(x, m), m) == DihedralElement{0, 0});
    CHECK(group_mul(group_inv(x, m), x, m) == DihedralElement{0, 0});
  }
}

TEST_CASE("group multiplication is associative") {
  Rng rng(1);
  unsigned m = 5;
  auto elements = all_elements(m);
  for (int trial = 0; trial < 1000; ++trial) {
    auto x = elements[rng.below(elements.size())];
    auto y = elements[rng.below(elements.size())];
    auto z = elements[rng.below(elements.size())];
    CHECK(group_mul(group_mul(x, y, m), z, m) == group_mul(x, group_mul(y, z, m), m));
  }
}

TEST_CASE("theta branch evaluation") {
  ThetaParams p;
  p.m = 4;
  p.r1 = 3; p.r2 = 3; p.q1 = 3; p.q2 = 3;
  p.c1 = 0; p.c2 = 1; p.b1 = 1; p.b2 = 0;
  CHECK(theta_apply(p, {1, 0}) == DihedralElement{3, 0});  // theta(a) = a^3
  CHECK(theta_apply(p, {0, 0}) == DihedralElement{0, 0});  // r1*0 + c1 = 0
  CHECK(theta_apply(p, {4, 0}) == DihedralElement{(3 * 4 + 1) % 8, 1});
  CHECK(theta_apply(p, {1, 1}) == DihedralElement{(3 * 1 + 1) % 8, 1});
  CHECK(theta_apply(p, {5, 1}) == DihedralElement{(3 * 5 + 0) % 8, 0});
}

TEST_CASE("theta maps each branch into the stated coset") {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned m = 4 + unsigned(rng.below(3));
    auto p = random_params(m, rng);
    unsigned half = 1u << (m - 2);
    for (auto x : all_elements(m)) {
      auto y = theta_apply(p, x);
      bool lower = x.i < half;
      unsigned expect_j = x.j == 0 ? (lower ? 0u : 1u) : (lower ? 1u : 0u);
      CHECK(y.j == expect_j);
    }
  }
}

TEST_CASE("identity-like theta is not an orthomorphism") {
  // theta = id on rotations maps alpha -> alpha^-1 theta(alpha) = e there
  ThetaParams p;
  p.m = 4;
  p.r1 = 1; p.c1 = 0;      // a^i -> a^i on the lower half
  p.r2 = 1; p.c2 = 0;
  p.q1 = 1; p.b1 = 0;
  p.q2 = 1; p.b2 = 0;
  CHECK_FALSE(is_orthomorphism_bruteforce(p));
  CHECK_FALSE(theorem_predicate(p));
}

TEST_CASE("condition-1 example is an orthomorphism by both engines") {
  ThetaParams p;
  p.m = 4;
  p.r1 = 3; p.r2 = 3; p.q1 = 3; p.q2 = 3;
  p.c1 = 0; p.c2 = 1; p.b1 = 1; p.b2 = 0;
  CHECK(is_orthomorphism_bruteforce(p));
  CHECK(theorem_predicate(p));
}

TEST_CASE("r1 = 0 mod 4 never qualifies") {
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    auto p = random_params(4, rng);
    p.r1 = 4 * unsigned(rng.below(2));  // 0 or 4
    CHECK_FALSE(theorem_predicate(p));
    CHECK_FALSE(is_orthomorphism_bruteforce(p));
  }
}

TEST_CASE("closed form agrees with brute force on samples, m = 4,5,6") {
  Rng rng(4);
  for (unsigned m : {4u, 5u, 6u}) {
    for (int trial = 0; trial < 3000; ++trial) {
      auto p = random_params(m, rng);
      CHECK(theorem_predicate(p) == is_orthomorphism_bruteforce(p));
    }
  }
}

TEST_CASE("predicate-only census at m = 4 finds 2^8") {
  auto result = enumerate_orthomorphisms(4, false, false);
  CHECK(result.predicate_count == 256);
}

TEST_CASE("collected parameters satisfy exactly one condition") {
  auto result = enumerate_orthomorphisms(4, false, true);
  REQUIRE(result.params.size() == 256);
  std::size_t cond1 = 0, cond2 = 0;
  for (const auto& p : result.params) {
    bool c1 = p.r1 % 4 == 3 && p.r2 % 4 == 3;
    bool c2 = p.r1 % 4 == 2 && p.r2 % 4 == 2;
    CHECK(c1 != c2);  // r mod 4 makes the conditions exclusive
    cond1 += c1;
    cond2 += c2;
  }
  CHECK(cond1 == 128);
  CHECK(cond2 == 128);
}

TEST_CASE("difference sets match the closed form") {
  for (unsigned d : {4u, 5u, 6u}) {
    unsigned half = 1u << (d - 1);
    // the lemma's domain: residues 1, 2, 3 mod 4 inside Z_{2^(d-1)}
    for (unsigned h1 = 1; h1 < half; ++h1) {
      if (h1 % 4 == 0) continue;
      for (unsigned h2 = 1; h2 < half; ++h2) {
        if (h2 % 4 == 0) continue;
        auto closed = difference_set_closed_form(h1, h2, d);
        if (!closed) continue;  // mixed parity beyond the stated cases
        CHECK(difference_set(h1, h2, d) == *closed);
      }
    }
    // the h2 = 2^d - h1 branch (reachable only with the wider range)
    for (unsigned h1 = 1; h1 < half; h1 += 2) {
      unsigned h2 = (1u << d) - h1;
      auto closed = difference_set_closed_form(h1, h2, d);
      REQUIRE(closed.has_value());
      CHECK(difference_set(h1, h2, d) == *closed);
    }
  }
}

TEST_CASE("brute force bounds") {
  ThetaParams p;
  p.m = 12;
  CHECK_THROWS_AS(is_orthomorphism_bruteforce(p), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_orthomorphisms(3, false, false), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_orthomorphisms(5, true, false), std::invalid_argument);
}
