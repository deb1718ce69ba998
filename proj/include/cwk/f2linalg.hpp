#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cwk/bitstring.hpp"

namespace cwk::f2 {

// Dense bit-packed matrix over F2, row-major.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(const std::vector<BitString>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int at(std::size_t r, std::size_t c) const {
    return int((data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u);
  }
  void set(std::size_t r, std::size_t c, int v);

  BitString row(std::size_t r) const;
  void set_row(std::size_t r, const BitString& b);
  F2Matrix permuted_cols(const std::vector<std::size_t>& perm) const;

  // M * x with x a column vector of length cols().
  BitString multiply(const BitString& x) const;

  std::size_t rank() const;
  // One solution z of M z = rhs, or empty if inconsistent. Leftmost pivots,
  // free variables set to zero, so the result is deterministic.
  std::optional<BitString> solve(const BitString& rhs) const;
  std::vector<BitString> nullspace_basis() const;

 private:
  void xor_row(std::size_t dst, std::size_t src);
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;  // wpr_: 64-bit words per row
  std::vector<std::uint64_t> data_;
};

// Family of s generator vectors in F2^r with products of up to d of them.
struct BasisFamily {
  std::size_t s = 0;
  std::size_t d = 0;
  std::size_t r = 0;  // sum_{i=0..d} C(s, i)
  std::vector<BitString> generators;
};

std::size_t basis_dimension(std::size_t s, std::size_t d);

// Subsets of {0..s-1} of size 0..d, size-ascending then lexicographic.
std::vector<std::vector<std::size_t>> product_subsets(std::size_t s, std::size_t d);

// All componentwise products of up to d generators, empty product (all-ones)
// first, then subsets in product_subsets order. Exactly r vectors.
std::vector<BitString> componentwise_products(const BasisFamily& fam);

bool is_basis_family(const BasisFamily& fam);

// A family whose product set is a basis of F2^r. s = d uses the value vectors
// of the d coordinate functions over all 2^d inputs; s > d uses the
// subset-incidence columns, which make the product matrix triangular.
BasisFamily construct_basis_family(std::size_t s, std::size_t d);

}  // namespace cwk::f2
