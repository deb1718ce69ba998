#pragma once

#include <cstdint>
#include <vector>

namespace cwk::primality {

// n - 1 = 2^k * 3^l * m with m coprime to 6.
struct Decomposition {
  std::uint64_t n = 0;
  unsigned k = 0;
  unsigned l = 0;
  std::uint64_t m = 0;
};

Decomposition decompose(std::uint64_t n);  // n odd, n >= 5

enum class Outcome { kProbablyPrime, kComposite };

// Which step of the modified test fired. kStep5 iff composite.
enum class Stage { kStep2, kStep3b, kStep4a, kStep5 };

struct Verdict {
  Outcome value = Outcome::kComposite;
  Stage stage = Stage::kStep5;
  unsigned iteration = 0;  // loop index for kStep3b / kStep4a
};

struct BobTrace {
  std::uint64_t a_after_step2 = 0;
  std::uint64_t a_after_step3 = 0;
  bool reached_step4 = false;
};

// The modified test: raise to m, then l cube steps checking n | a + a^2 + 1,
// then k squarings checking n | a + 1.
Verdict bob_test(std::uint64_t n, std::uint64_t a, BobTrace* trace = nullptr);

// Classical strong-pseudoprime test with odd part 3^l * m.
Verdict standard_mr(std::uint64_t n, std::uint64_t a);

enum class Tester { kBob, kStandard };

inline constexpr std::uint64_t kCensusBound = 1000000;

// All bases in [2, n-2] the chosen tester accepts. Exhaustive, so n is
// capped (kCensusBound by default).
std::vector<std::uint64_t> accept_census(std::uint64_t n, Tester tester,
                                         std::uint64_t bound = kCensusBound);

}  // namespace cwk::primality
