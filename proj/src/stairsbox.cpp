#include "cwk/stairsbox.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cwk::stairsbox {

SBox64 SBox64::identity() {
  SBox64 s;
  for (int i = 0; i < 64; ++i) s.table[i] = std::uint8_t(i);
  return s;
}

SBox64 SBox64::from_values(const std::vector<int>& values) {
  if (values.size() != 64) throw std::invalid_argument("SBox64: need 64 values");
  SBox64 s;
  for (int i = 0; i < 64; ++i) {
    if (values[i] < 0 || values[i] > 63) throw std::invalid_argument("SBox64: value out of range");
    s.table[i] = std::uint8_t(values[i]);
  }
  if (!s.is_permutation()) throw std::invalid_argument("SBox64: not a permutation");
  return s;
}

bool SBox64::is_permutation() const {
  std::uint64_t seen = 0;
  for (int i = 0; i < 64; ++i) seen |= std::uint64_t(1) << table[i];
  return seen == ~std::uint64_t(0);
}

SBox64 SBox64::inverse() const {
  SBox64 inv;
  for (int i = 0; i < 64; ++i) inv.table[table[i]] = std::uint8_t(i);
  return inv;
}

LinearMap6 LinearMap6::identity() {
  LinearMap6 m;
  for (int j = 0; j < 6; ++j) m.rows[j] = std::uint8_t(1u << j);
  return m;
}

bool LinearMap6::invertible() const { return inverse().has_value(); }

std::optional<LinearMap6> LinearMap6::inverse() const {
  // augmented rows: low 6 bits = this map, high 6 bits = identity
  std::array<std::uint16_t, 6> aug;
  for (int j = 0; j < 6; ++j) aug[j] = std::uint16_t(rows[j] | (1u << (6 + j)));
  for (int col = 0; col < 6; ++col) {
    int pivot = -1;
    for (int r = col; r < 6; ++r)
      if ((aug[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    for (int r = 0; r < 6; ++r)
      if (r != col && ((aug[r] >> col) & 1u)) aug[r] ^= aug[col];
  }
  LinearMap6 inv;
  for (int j = 0; j < 6; ++j) inv.rows[j] = std::uint8_t(aug[j] >> 6);
  return inv;
}

std::array<std::array<int, 6>, 6> LinearMap6::to_matrix() const {
  std::array<std::array<int, 6>, 6> m{};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m[r][c] = (rows[5 - r] >> (5 - c)) & 1;
  return m;
}

BitString num_to_vec(int x) {
  if (x < 0 || x > 63) throw std::invalid_argument("num_to_vec: value out of [0,63]");
  return BitString::from_uint(std::uint64_t(x), 6);
}

int vec_to_num(const BitString& v) {
  if (v.size() != 6) throw std::invalid_argument("vec_to_num: need 6 bits");
  return int(v.to_uint());
}

std::array<int, 64> anf_degree_table(const SBox64& s) {
  std::array<int, 64> degrees;
  degrees[0] = -1;
  for (int mask = 1; mask < 64; ++mask) {
    std::array<int, 64> f;
    for (int x = 0; x < 64; ++x) f[x] = __builtin_popcount(unsigned(mask) & s.table[x]) & 1;
    // Moebius transform: truth table -> ANF coefficients
    for (int v = 0; v < 6; ++v)
      for (int x = 0; x < 64; ++x)
        if (x & (1 << v)) f[x] ^= f[x ^ (1 << v)];
    int deg = 0;
    for (int x = 0; x < 64; ++x)
      if (f[x]) deg = std::max(deg, __builtin_popcount(unsigned(x)));
    degrees[mask] = deg;
  }
  return degrees;
}

std::array<int, 6> staircase_degrees(const SBox64& s) {
  auto degrees = anf_degree_table(s);
  std::array<int, 63> order;
  for (int i = 0; i < 63; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return degrees[a] != degrees[b] ? degrees[a] < degrees[b] : a < b; });
  // greedy independent picks; independence is a matroid, so this minimizes
  // the sorted degree sequence
  std::array<int, 6> picked{};
  std::array<std::uint8_t, 6> basis{};
  int count = 0;
  for (int mask : order) {
    std::uint8_t v = std::uint8_t(mask);
    for (int b = 5; b >= 0; --b)
      if ((v >> b) & 1u && basis[b]) v ^= basis[b];
    if (!v) continue;
    for (int b = 5; b >= 0; --b)
      if ((v >> b) & 1u) {
        basis[b] = v;
        break;
      }
    picked[count++] = degrees[mask];
    if (count == 6) break;
  }
  return picked;
}

SBox64 compose(const LinearMap6& a, const AffineModMap& x, const LinearMap6& b) {
  if (!a.invertible() || !b.invertible())
    throw std::invalid_argument("compose: outer maps must be invertible");
  SBox64 s;
  for (int v = 0; v < 64; ++v) s.table[v] = std::uint8_t(a.apply(x.apply(b.apply(v))));
  return s;
}

namespace {

struct Search {
  const SBox64& sbox;
  std::size_t max_triples;
  std::vector<Decomposition>& out;
  bool& truncated;

  std::array<std::uint64_t, 64> eval_in{};   // bit x of eval_in[mask]: parity(mask & x)
  std::unordered_map<std::uint64_t, std::uint8_t> sbox_words;  // eval word -> output mask

  std::array<std::uint8_t, 6> prow{}, brow{};
  std::array<std::uint8_t, 64> y{};  // B(x) mod 2^level
  unsigned aval = 0, bval = 0;

  explicit Search(const SBox64& s, std::size_t cap, std::vector<Decomposition>& sink, bool& trunc)
      : sbox(s), max_triples(cap), out(sink), truncated(trunc) {
    for (int mask = 0; mask < 64; ++mask) {
      std::uint64_t win = 0, wout = 0;
      for (int x = 0; x < 64; ++x) {
        win |= std::uint64_t(__builtin_popcount(unsigned(mask) & unsigned(x)) & 1) << x;
        wout |= std::uint64_t(__builtin_popcount(unsigned(mask) & sbox.table[x]) & 1) << x;
      }
      eval_in[mask] = win;
      if (mask) sbox_words.emplace(wout, std::uint8_t(mask));
    }
  }

  static bool independent(const std::array<std::uint8_t, 6>& rows, int count, std::uint8_t cand) {
    std::uint8_t v = cand;
    // reduce against the rows chosen so far
    std::array<std::uint8_t, 6> basis{};
    for (int i = 0; i < count; ++i) {
      std::uint8_t r = rows[i];
      for (int b = 5; b >= 0; --b)
        if ((r >> b) & 1u) {
          if (basis[b])
            r ^= basis[b];
          else {
            basis[b] = r;
            break;
          }
        }
    }
    for (int b = 5; b >= 0; --b)
      if ((v >> b) & 1u) {
        if (basis[b])
          v ^= basis[b];
        else
          return true;
      }
    return v != 0;
  }

  void emit() {
    LinearMap6 p, b;
    p.rows = prow;
    b.rows = brow;
    auto a_inv = p.inverse();
    if (!a_inv) return;  // cannot happen: rows kept independent
    Decomposition d{*a_inv, AffineModMap{aval, bval}, b};
    if (compose(d.a, d.x, d.b) == sbox) {
      if (out.size() < max_triples)
        out.push_back(d);
      else
        truncated = true;
    }
  }

  void descend(int level) {
    if (truncated) return;
    if (level == 6) {
      emit();
      return;
    }
    unsigned abit_lo = level == 0 ? 1u : 0u;  // a must be odd
    for (unsigned abit = abit_lo; abit < 2; ++abit) {
      unsigned a_next = aval | (abit << level);
      for (unsigned bbit = 0; bbit < 2; ++bbit) {
        unsigned b_next = bval | (bbit << level);
        for (int row = 1; row < 64; ++row) {
          if (!independent(brow, level, std::uint8_t(row))) continue;
          // target word: bit x = bit `level` of a*(y | row-bit<<level) + b
          std::uint64_t target = 0;
          std::uint64_t rowword = eval_in[row];
          for (int x = 0; x < 64; ++x) {
            unsigned yx = y[x] | (unsigned((rowword >> x) & 1u) << level);
            target |= std::uint64_t((a_next * yx + b_next) >> level & 1u) << x;
          }
          if (target == 0) continue;  // would force a zero row of A^-1
          auto it = sbox_words.find(target);
          if (it == sbox_words.end()) continue;
          std::uint8_t pmask = it->second;
          if (!independent(prow, level, pmask)) continue;

          auto saved_y = y;
          for (int x = 0; x < 64; ++x) y[x] |= std::uint8_t(((rowword >> x) & 1u) << level);
          prow[level] = pmask;
          brow[level] = std::uint8_t(row);
          unsigned sa = aval, sb = bval;
          aval = a_next;
          bval = b_next;
          descend(level + 1);
          aval = sa;
          bval = sb;
          y = saved_y;
          if (truncated) return;
        }
      }
    }
  }
};

}  // namespace

RecoverResult recover(const SBox64& s, std::size_t max_triples) {
  if (!s.is_permutation()) throw std::invalid_argument("recover: input is not a permutation");
  RecoverResult result;
  Search search(s, max_triples, result.triples, result.truncated);
  search.descend(0);
  return result;
}

std::vector<AffineModMap> x_candidates(const RecoverResult& result) {
  std::vector<AffineModMap> xs;
  for (const auto& t : result.triples) xs.push_back(t.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace cwk::stairsbox
