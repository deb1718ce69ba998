#include "cwk/puzzles.hpp"

#include <bit>
#include <deque>
#include <vector>

namespace cwk::puzzles {

bool winston_reachable(std::uint64_t x, std::uint64_t y) {
  return (std::popcount(x) & 1) == (std::popcount(y) & 1);
}

PolyVerdict poly_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      std::int64_t da = pairs[i].first - pairs[j].first;
      std::int64_t dp = pairs[i].second - pairs[j].second;
      if (da == 0) {
        if (dp != 0) return PolyVerdict::kConflictingDuplicate;
        continue;
      }
      if (dp % da != 0) return PolyVerdict::kDivisibilityViolation;
    }
  return PolyVerdict::kConsistent;
}

bool poly_consistent(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  return poly_check(pairs) == PolyVerdict::kConsistent;
}

RgbState rgb_step(RgbState s, RgbQuery q) {
  long a = s.a, b = s.b, na = 0, nb = 0;
  switch (q) {
    case RgbQuery::kRed:
      na = a + 18 * b;
      nb = 18 * a - b;
      break;
    case RgbQuery::kGreen:
      na = 17 * a + 6 * b;
      nb = -6 * a + 17 * b;
      break;
    case RgbQuery::kBlue:
      na = -10 * a - 15 * b;
      nb = 15 * a - 10 * b;
      break;
  }
  // Reduction mod 324 realizes the reset rule: a coordinate hitting a
  // multiple of 324 becomes 0.
  auto norm = [](long v) { return int(((v % kRgbModulus) + kRgbModulus) % kRgbModulus); };
  return RgbState{norm(na), norm(nb)};
}

int rgb_invariant(RgbState s) { return (s.a * s.a + s.b * s.b) % kRgbModulus; }

bool rgb_can_crash(RgbState start) {
  const int n = kRgbModulus;
  std::vector<bool> seen(std::size_t(n) * n, false);
  std::deque<RgbState> queue{start};
  seen[std::size_t(start.a) * n + start.b] = true;
  while (!queue.empty()) {
    RgbState s = queue.front();
    queue.pop_front();
    if (s.a == 0 && s.b == 0) return true;
    for (RgbQuery q : {RgbQuery::kRed, RgbQuery::kGreen, RgbQuery::kBlue}) {
      RgbState t = rgb_step(s, q);
      std::size_t key = std::size_t(t.a) * n + t.b;
      if (!seen[key]) {
        seen[key] = true;
        queue.push_back(t);
      }
    }
  }
  return false;
}

}  // namespace cwk::puzzles
