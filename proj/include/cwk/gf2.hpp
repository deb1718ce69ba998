#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cwk/rng.hpp"

namespace cwk::gf2 {

// Element of GF(2^128) under x^128 + x^7 + x^2 + x + 1. Internally bit i of
// lo (then hi) is the coefficient of x^i; block serialization follows the
// GCM convention, where the most significant bit of the first byte is the
// coefficient of x^0.
struct Gf128 {
  std::uint64_t lo = 0, hi = 0;

  static Gf128 zero() { return {}; }
  static Gf128 one() { return {1, 0}; }

  static Gf128 from_block(const std::uint8_t block[16]);
  void to_block(std::uint8_t out[16]) const;
  static Gf128 from_hex(std::string_view hex32);
  std::string to_hex() const;
  // "a^126 + a^125 + ... + a^2 + a + 1" with a the residue class of x.
  static Gf128 from_power_sum(std::string_view s);
  std::string to_power_sum() const;

  bool is_zero() const { return lo == 0 && hi == 0; }
  bool operator==(const Gf128&) const = default;
};

inline Gf128 gf_add(Gf128 a, Gf128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
Gf128 gf_mul(Gf128 a, Gf128 b);
inline Gf128 gf_sq(Gf128 a) { return gf_mul(a, a); }
Gf128 gf_pow(Gf128 base, std::uint64_t exp_hi, std::uint64_t exp_lo);
inline Gf128 gf_pow(Gf128 base, std::uint64_t exp) { return gf_pow(base, 0, exp); }
Gf128 gf_pow2k(Gf128 a, unsigned k);  // a^(2^k), k squarings
Gf128 gf_inv(Gf128 a);                // throws on zero

// ---- field traits for the templated polynomial stack ----

struct Gf128Field {
  using Elem = Gf128;
  static constexpr unsigned kDegree = 128;
  static Elem zero() { return Gf128::zero(); }
  static Elem one() { return Gf128::one(); }
  static Elem add(Elem a, Elem b) { return gf_add(a, b); }
  static Elem mul(Elem a, Elem b) { return gf_mul(a, b); }
  static Elem inv(Elem a) { return gf_inv(a); }
  static bool is_zero(Elem a) { return a.is_zero(); }
  static Elem random(Rng& rng) { return {rng.next_u64(), rng.next_u64()}; }
};

// GF(2^8) under x^8 + x^4 + x^3 + x + 1; small enough for exhaustive checks.
struct Gf8Field {
  using Elem = std::uint8_t;
  static constexpr unsigned kDegree = 8;
  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  static Elem add(Elem a, Elem b) { return a ^ b; }
  static Elem mul(Elem a, Elem b) {
    unsigned acc = 0, x = a;
    for (unsigned i = 0; i < 8; ++i) {
      if ((b >> i) & 1u) acc ^= x << i;
    }
    for (int i = 15; i >= 8; --i)
      if ((acc >> i) & 1u) acc ^= 0x11bu << (i - 8);
    return Elem(acc);
  }
  static Elem inv(Elem a) {
    if (a == 0) throw std::domain_error("gf256: inverse of zero");
    Elem r = 1;
    for (int i = 0; i < 254; ++i) r = mul(r, a);  // a^254 = a^-1
    return r;
  }
  static bool is_zero(Elem a) { return a == 0; }
  static Elem random(Rng& rng) { return Elem(rng.next_u64() & 0xff); }
};

// Univariate polynomial with ascending coefficients, leading coefficient
// nonzero (empty vector = zero polynomial).
template <class F>
struct Poly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;

  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && F::is_zero(c.back())) c.pop_back();
  }
  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : F::zero(); }

  static Poly x() { return Poly({F::zero(), F::one()}); }
  static Poly constant(Elem e) { return Poly({e}); }
  static Poly linear_root(Elem r) { return Poly({r, F::one()}); }  // x + r

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.c.size(), b.c.size()), F::zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F::add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Elem> out(a.c.size() + b.c.size() - 1, F::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j)
        out[i + j] = F::add(out[i + j], F::mul(a.c[i], b.c[j]));
    return Poly(std::move(out));
  }

  Elem eval(Elem at) const {  // Horner
    Elem acc = F::zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = F::add(F::mul(acc, at), c[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    Elem leading_inverse = F::inv(c.back());
    for (auto& e : out.c) e = F::mul(e, leading_inverse);
    return out;
  }
};

template <class F>
void poly_divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  q = Poly<F>();
  r = a;
  auto lead_inv = F::inv(b.c.back());
  if (r.degree() >= b.degree()) q.c.assign(std::size_t(r.degree() - b.degree()) + 1, F::zero());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = std::size_t(r.degree() - b.degree());
    auto factor = F::mul(r.c.back(), lead_inv);
    q.c[shift] = F::add(q.c[shift], factor);
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = F::add(r.c[shift + i], F::mul(factor, b.c[i]));
    r.normalize();
  }
  q.normalize();
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> q, r;
  poly_divmod(a, b, q, r);
  return r;
}

// Monic gcd; gcd(g, 0) = monic(g).
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

namespace detail {

// Splits a monic product of distinct linear factors with gcds against random
// trace polynomials Tr(beta * x).
template <class F>
void split_linear_product(const Poly<F>& f, Rng& rng, std::vector<typename F::Elem>& roots) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    roots.push_back(f.c[0]);  // monic x + r has root r
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto beta = F::random(rng);
    if (F::is_zero(beta)) continue;
    Poly<F> bx({F::zero(), beta});
    Poly<F> cur = poly_mod(bx, f);
    Poly<F> acc = cur;
    for (unsigned j = 1; j < F::kDegree; ++j) {
      cur = poly_mod(cur * cur, f);
      acc = acc + cur;
    }
    Poly<F> g = poly_gcd(f, acc);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      Poly<F> q, r;
      poly_divmod(f, g, q, r);
      split_linear_product(g, rng, roots);
      split_linear_product(q, rng, roots);
      return;
    }
  }
  throw std::runtime_error("root splitting failed to converge");
}

}  // namespace detail

// All roots of g in the field. Squares x up the Frobenius chain to isolate
// the product of distinct linear factors, then trace-splits it.
template <class F>
std::vector<typename F::Elem> find_roots(const Poly<F>& g, Rng& rng) {
  if (g.degree() < 1) throw std::invalid_argument("find_roots: degree >= 1 required");
  Poly<F> f = g.monic();
  Poly<F> r = poly_mod(Poly<F>::x(), f);
  for (unsigned j = 0; j < F::kDegree; ++j) r = poly_mod(r * r, f);
  Poly<F> linear_part = poly_gcd(f, r + poly_mod(Poly<F>::x(), f));
  std::vector<typename F::Elem> roots;
  detail::split_linear_product(linear_part, rng, roots);
  return roots;
}

}  // namespace cwk::gf2
