#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cwk::ortho {

// Element a^i u^j of the dihedral group of order 2^m, with
// a^(2^(m-1)) = e, u^2 = e, u a = a^-1 u.
struct DihedralElement {
  unsigned i = 0;  // rotation exponent, mod 2^(m-1)
  unsigned j = 0;  // reflection flag, 0 or 1
  bool operator==(const DihedralElement&) const = default;
};

DihedralElement group_mul(DihedralElement x, DihedralElement y, unsigned m);
DihedralElement group_inv(DihedralElement x, unsigned m);

// The eight parameters of the piecewise map theta, all mod 2^(m-1).
struct ThetaParams {
  unsigned m = 4;
  unsigned r1 = 0, r2 = 0, q1 = 0, q2 = 0;
  unsigned b1 = 0, b2 = 0, c1 = 0, c2 = 0;
};

// Rotations map by (r1,c1) on the lower half of exponents and to reflections
// by (r2,c2) on the upper half; reflections symmetrically via (q1,b1),(q2,b2).
DihedralElement theta_apply(const ThetaParams& p, DihedralElement x);

// theta is an orthomorphism iff both theta and alpha -> alpha^-1 theta(alpha)
// are permutations. Exhaustive over the 2^m elements; m <= 10.
bool is_orthomorphism_bruteforce(const ThetaParams& p);

// Closed-form criterion equivalent to the brute-force check.
bool theorem_predicate(const ThetaParams& p);

struct EnumerationResult {
  std::uint64_t predicate_count = 0;
  std::optional<std::uint64_t> bruteforce_count;  // filled when brute force ran
  std::vector<ThetaParams> params;                // filled on request
};

// m = 4 supports the full 8^8 sweep with both engines; larger m enumerates
// by predicate only.
EnumerationResult enumerate_orthomorphisms(unsigned m, bool run_bruteforce, bool collect,
                                           unsigned threads = 0);

// {h1*j1 - h2*j2 mod 2^d : j1, j2 in Z_{2^(d-1)}}, ascending.
std::vector<unsigned> difference_set(unsigned h1, unsigned h2, unsigned d);
// Closed form for the same set; empty optional outside the covered cases.
std::optional<std::vector<unsigned>> difference_set_closed_form(unsigned h1, unsigned h2,
                                                                unsigned d);

}  // namespace cwk::ortho
