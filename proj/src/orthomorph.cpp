#include "cwk/orthomorph.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cwk::ortho {

DihedralElement group_mul(DihedralElement x, DihedralElement y, unsigned m) {
  unsigned mod = 1u << (m - 1);
  // a^i u^j * a^k u^l = a^(i + k) u^l        if j = 0
  //                   = a^(i - k) u^(1 xor l) if j = 1   (u a = a^-1 u)
  unsigned i = x.j == 0 ? (x.i + y.i) % mod : (x.i + mod - y.i % mod) % mod;
  return {i, x.j ^ y.j};
}

DihedralElement group_inv(DihedralElement x, unsigned m) {
  unsigned mod = 1u << (m - 1);
  if (x.j) return x;  // reflections are involutions
  return {(mod - x.i) % mod, 0};
}

DihedralElement theta_apply(const ThetaParams& p, DihedralElement x) {
  unsigned mod = 1u << (p.m - 1);
  unsigned half = 1u << (p.m - 2);
  bool lower = x.i < half;
  if (x.j == 0) {
    if (lower) return {(p.r1 * x.i + p.c1) % mod, 0};
    return {(p.r2 * x.i + p.c2) % mod, 1};
  }
  if (lower) return {(p.q1 * x.i + p.b1) % mod, 1};
  return {(p.q2 * x.i + p.b2) % mod, 0};
}

bool is_orthomorphism_bruteforce(const ThetaParams& p) {
  if (p.m < 4 || p.m > 10) throw std::invalid_argument("brute force supports 4 <= m <= 10");
  unsigned mod = 1u << (p.m - 1);
  // bitset over element keys i*2+j; two words cover m <= 10
  std::uint64_t seen_theta[16] = {0}, seen_pi[16] = {0};
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < mod; ++i) {
      DihedralElement alpha{i, j};
      DihedralElement t = theta_apply(p, alpha);
      unsigned tkey = t.i * 2 + t.j;
      std::uint64_t tbit = std::uint64_t(1) << (tkey & 63);
      if (seen_theta[tkey >> 6] & tbit) return false;
      seen_theta[tkey >> 6] |= tbit;
      DihedralElement pi = group_mul(group_inv(alpha, p.m), t, p.m);
      unsigned pkey = pi.i * 2 + pi.j;
      std::uint64_t pbit = std::uint64_t(1) << (pkey & 63);
      if (seen_pi[pkey >> 6] & pbit) return false;
      seen_pi[pkey >> 6] |= pbit;
    }
  return true;
}

bool theorem_predicate(const ThetaParams& p) {
  unsigned mod = 1u << (p.m - 1);
  auto odd = [](unsigned v) { return (v & 1u) != 0; };
  if (p.r1 % 4 == 3 && p.r2 % 4 == 3) {
    return p.r1 == p.q2 && p.r2 == p.q1 && p.c1 == p.b2 && p.c2 == p.b1 && odd(p.c1 + p.c2);
  }
  if (p.r1 % 4 == 2 && p.r2 % 4 == 2) {
    return p.r1 == p.q1 && p.r2 == p.q2 && (p.q1 + mod - 1) % mod == (p.b1 + p.c1) % mod &&
           (p.q2 + mod - 1) % mod == (p.b2 + p.c2) % mod && odd(p.b1 + p.c2) && odd(p.b2 + p.c1);
  }
  return false;
}

EnumerationResult enumerate_orthomorphisms(unsigned m, bool run_bruteforce, bool collect,
                                           unsigned threads) {
  if (m < 4) throw std::invalid_argument("enumerate_orthomorphisms: m >= 4");
  if (run_bruteforce && m != 4)
    throw std::invalid_argument("exhaustive dual-engine sweep is provided for m = 4 only");
  unsigned mod = 1u << (m - 1);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  struct Partial {
    std::uint64_t pred = 0, brute = 0, disagree = 0;
    std::vector<ThetaParams> params;
  };
  std::vector<Partial> parts(threads);

  // Tuple space indexed by (r1, r2, q1, q2) outer and (b1, b2, c1, c2) inner.
  std::uint64_t outer_total = std::uint64_t(mod) * mod * mod * mod;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      Partial& part = parts[w];
      for (std::uint64_t outer = w; outer < outer_total; outer += threads) {
        ThetaParams p;
        p.m = m;
        std::uint64_t v = outer;
        p.r1 = unsigned(v % mod); v /= mod;
        p.r2 = unsigned(v % mod); v /= mod;
        p.q1 = unsigned(v % mod); v /= mod;
        p.q2 = unsigned(v % mod);
        for (p.b1 = 0; p.b1 < mod; ++p.b1)
          for (p.b2 = 0; p.b2 < mod; ++p.b2)
            for (p.c1 = 0; p.c1 < mod; ++p.c1)
              for (p.c2 = 0; p.c2 < mod; ++p.c2) {
                bool pred = theorem_predicate(p);
                if (pred) ++part.pred;
                if (run_bruteforce) {
                  bool brute = is_orthomorphism_bruteforce(p);
                  if (brute) ++part.brute;
                  if (brute != pred) ++part.disagree;
                }
                if (pred && collect) part.params.push_back(p);
              }
      }
    });
  for (auto& th : pool) th.join();

  EnumerationResult result;
  std::uint64_t disagreements = 0, brute = 0;
  for (auto& part : parts) {
    result.predicate_count += part.pred;
    brute += part.brute;
    disagreements += part.disagree;
    if (collect)
      result.params.insert(result.params.end(), part.params.begin(), part.params.end());
  }
  if (run_bruteforce) {
    result.bruteforce_count = brute;
    if (disagreements)
      throw std::logic_error("theorem predicate disagrees with brute force");
  }
  return result;
}

std::vector<unsigned> difference_set(unsigned h1, unsigned h2, unsigned d) {
  unsigned mod = 1u << d;
  unsigned half = 1u << (d - 1);
  std::vector<bool> seen(mod, false);
  for (unsigned j1 = 0; j1 < half; ++j1)
    for (unsigned j2 = 0; j2 < half; ++j2)
      seen[(h1 * j1 + mod * mod - h2 * j2) % mod] = true;
  std::vector<unsigned> out;
  for (unsigned v = 0; v < mod; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::optional<std::vector<unsigned>> difference_set_closed_form(unsigned h1, unsigned h2,
                                                                unsigned d) {
  unsigned mod = 1u << d;
  unsigned half = 1u << (d - 1);
  auto full_minus = [&](std::optional<unsigned> hole) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < mod; ++v)
      if (!hole || v != *hole) out.push_back(v);
    return out;
  };
  if ((h1 & 1u) || (h2 & 1u)) {
    if (h1 == h2) return full_minus(half);
    if (h2 % mod == (mod - h1 % mod) % mod) return full_minus((mod - h1 % mod) % mod);
    return full_minus(std::nullopt);
  }
  if (h1 % 4 == 2 && h2 % 4 == 2) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < mod; v += 2) out.push_back(v);
    return out;
  }
  return std::nullopt;  // multiples of 4 are outside the covered cases
}

}  // namespace cwk::ortho
