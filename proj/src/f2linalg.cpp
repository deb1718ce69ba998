#include "cwk/f2linalg.hpp"

#include <stdexcept>

namespace cwk::f2 {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<BitString>& rows) {
  if (rows.empty()) return F2Matrix();
  F2Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, int v) {
  std::uint64_t mask = std::uint64_t(1) << (c & 63);
  if (v)
    data_[r * wpr_ + (c >> 6)] |= mask;
  else
    data_[r * wpr_ + (c >> 6)] &= ~mask;
}

BitString F2Matrix::row(std::size_t r) const {
  BitString b(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (at(r, c)) b.set_bit(c, 1);
  return b;
}

void F2Matrix::set_row(std::size_t r, const BitString& b) {
  if (b.size() != cols_) throw std::invalid_argument("set_row: width mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, b.bit(c));
}

F2Matrix F2Matrix::permuted_cols(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_) throw std::invalid_argument("permuted_cols: size mismatch");
  F2Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, perm[c])) m.set(r, c, 1);
  return m;
}

BitString F2Matrix::multiply(const BitString& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  BitString out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= at(r, c) & x.bit(c);
    if (acc) out.set_bit(r, 1);
  }
  return out;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < wpr_; ++w) data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
}

std::size_t F2Matrix::rank() const {
  F2Matrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.at(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(m.data_[pivot * wpr_ + w], m.data_[rank * wpr_ + w]);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && m.at(r, c)) m.xor_row(r, rank);
    ++rank;
  }
  return rank;
}

std::optional<BitString> F2Matrix::solve(const BitString& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs dimension mismatch");
  F2Matrix m = *this;
  std::vector<int> b(rows_);
  for (std::size_t r = 0; r < rows_; ++r) b[r] = rhs.bit(r);

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.at(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(m.data_[pivot * wpr_ + w], m.data_[rank * wpr_ + w]);
      std::swap(b[pivot], b[rank]);
    }
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && m.at(r, c)) {
        m.xor_row(r, rank);
        b[r] ^= b[rank];
      }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows_; ++r)
    if (b[r]) return std::nullopt;

  BitString z(cols_);
  for (std::size_t i = 0; i < rank; ++i)
    if (b[i]) z.set_bit(pivot_col[i], 1);
  return z;
}

std::vector<BitString> F2Matrix::nullspace_basis() const {
  F2Matrix m = *this;
  std::vector<std::size_t> pivot_col;
  std::vector<int> col_pivot_row(cols_, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.at(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(m.data_[pivot * wpr_ + w], m.data_[rank * wpr_ + w]);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && m.at(r, c)) m.xor_row(r, rank);
    col_pivot_row[c] = int(rank);
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<BitString> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (col_pivot_row[f] >= 0) continue;
    BitString v(cols_);
    v.set_bit(f, 1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (m.at(i, f)) v.set_bit(pivot_col[i], 1);
    basis.push_back(v);
  }
  return basis;
}

std::size_t basis_dimension(std::size_t s, std::size_t d) {
  std::size_t r = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    // C(s, i) incrementally
    std::uint64_t c = 1;
    for (std::size_t j = 1; j <= i; ++j) c = c * (s - j + 1) / j;
    r += std::size_t(c);
  }
  return r;
}

std::vector<std::vector<std::size_t>> product_subsets(std::size_t s, std::size_t d) {
  std::vector<std::vector<std::size_t>> subsets;
  subsets.push_back({});
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      subsets.push_back(idx);
      // next lexicographic k-combination of {0..s-1}
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == s - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return subsets;
}

static void check_family(const BasisFamily& fam) {
  if (fam.d <= 1 || fam.d > fam.s)
    throw std::invalid_argument("basis family requires s >= d > 1");
  if (fam.generators.size() != fam.s)
    throw std::invalid_argument("basis family: generator count != s");
  if (fam.r != basis_dimension(fam.s, fam.d))
    throw std::invalid_argument("basis family: r != sum of binomials");
  for (const auto& g : fam.generators)
    if (g.size() != fam.r) throw std::invalid_argument("basis family: generator length != r");
}

std::vector<BitString> componentwise_products(const BasisFamily& fam) {
  check_family(fam);
  std::vector<BitString> out;
  out.reserve(fam.r);
  for (const auto& subset : product_subsets(fam.s, fam.d)) {
    BitString p = BitString::ones(fam.r);
    for (std::size_t i : subset) p = p & fam.generators[i];
    out.push_back(std::move(p));
  }
  return out;
}

bool is_basis_family(const BasisFamily& fam) {
  auto products = componentwise_products(fam);
  return F2Matrix::from_rows(products).rank() == fam.r;
}

BasisFamily construct_basis_family(std::size_t s, std::size_t d) {
  if (d <= 1 || d > s) throw std::invalid_argument("construct_basis_family: need s >= d > 1");
  BasisFamily fam;
  fam.s = s;
  fam.d = d;
  fam.r = basis_dimension(s, d);
  if (s == d) {
    // Coordinate functions x_1..x_d over inputs 0..2^d-1; generator i reads
    // bit d-1-i of the input, so generator 0 is the most significant bit.
    for (std::size_t i = 0; i < d; ++i) {
      BitString g(fam.r);
      for (std::size_t t = 0; t < fam.r; ++t)
        if ((t >> (d - 1 - i)) & 1u) g.set_bit(t, 1);
      fam.generators.push_back(std::move(g));
    }
  } else {
    // Column for subset J has generator-i entry [i in J]; the product of the
    // generators indexed by I then has entry [I subset of J], giving a
    // triangular product matrix in subset order.
    auto subsets = product_subsets(s, d);
    for (std::size_t i = 0; i < s; ++i) {
      BitString g(fam.r);
      for (std::size_t c = 0; c < subsets.size(); ++c)
        for (std::size_t member : subsets[c])
          if (member == i) {
            g.set_bit(c, 1);
            break;
          }
      fam.generators.push_back(std::move(g));
    }
  }
  return fam;
}

}  // namespace cwk::f2
