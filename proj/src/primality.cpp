#include "cwk/primality.hpp"

#include <stdexcept>

#include "cwk/puzzles.hpp"

namespace cwk::primality {

using puzzles::modpow;
using puzzles::mulmod;

Decomposition decompose(std::uint64_t n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("decompose: need odd n >= 5");
  Decomposition d;
  d.n = n;
  std::uint64_t v = n - 1;
  while (v % 2 == 0) {
    v /= 2;
    ++d.k;
  }
  while (v % 3 == 0) {
    v /= 3;
    ++d.l;
  }
  d.m = v;
  return d;
}

static void check_base(std::uint64_t n, std::uint64_t a) {
  if (a < 2 || a > n - 2) throw std::invalid_argument("base must be in [2, n-2]");
}

Verdict bob_test(std::uint64_t n, std::uint64_t a, BobTrace* trace) {
  Decomposition dec = decompose(n);
  check_base(n, a);

  a = modpow(a, dec.m, n);
  if (trace) trace->a_after_step2 = a;
  if (a == 1) return {Outcome::kProbablyPrime, Stage::kStep2, 0};

  for (unsigned i = 0; i < dec.l; ++i) {
    std::uint64_t b = mulmod(a, a, n);
    // a, b already reduced, so n | a + b + 1 means a + b + 1 == n exactly
    // (the sum is in [1, 2n - 1]). Widened to dodge overflow near 2^64.
    if ((unsigned __int128)a + b + 1 == n) return {Outcome::kProbablyPrime, Stage::kStep3b, i};
    a = mulmod(a, b, n);
  }
  if (trace) {
    trace->a_after_step3 = a;
    trace->reached_step4 = true;
  }

  for (unsigned i = 0; i < dec.k; ++i) {
    if (a + 1 == n) return {Outcome::kProbablyPrime, Stage::kStep4a, i};
    a = mulmod(a, a, n);
  }
  return {Outcome::kComposite, Stage::kStep5, 0};
}

Verdict standard_mr(std::uint64_t n, std::uint64_t a) {
  Decomposition dec = decompose(n);
  check_base(n, a);

  std::uint64_t t = dec.m;
  for (unsigned i = 0; i < dec.l; ++i) t *= 3;

  std::uint64_t x = modpow(a, t, n);
  if (x == 1) return {Outcome::kProbablyPrime, Stage::kStep2, 0};
  for (unsigned i = 0; i < dec.k; ++i) {
    if (x == n - 1) return {Outcome::kProbablyPrime, Stage::kStep4a, i};
    x = mulmod(x, x, n);
  }
  return {Outcome::kComposite, Stage::kStep5, 0};
}

std::vector<std::uint64_t> accept_census(std::uint64_t n, Tester tester, std::uint64_t bound) {
  if (n > bound) throw std::invalid_argument("accept_census: n exceeds exhaustive-sweep bound");
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 2; a + 2 <= n; ++a) {
    Verdict v = tester == Tester::kBob ? bob_test(n, a) : standard_mr(n, a);
    if (v.value == Outcome::kProbablyPrime) out.push_back(a);
  }
  return out;
}

}  // namespace cwk::primality
