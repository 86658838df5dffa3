// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLULC_GF2_HPP_
#define STABLULC_GF2_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stablulc {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison and hashing are exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("bit string may only contain '0' and '1'");
      }
    }
    return v;
  }

  static BitVector from_indices(std::size_t length,
                                const std::vector<std::size_t>& indices) {
    BitVector v(length);
    for (std::size_t i : indices) v.set(i);
    return v;
  }

  /// Unit vector e_i.
  static BitVector unit(std::size_t length, std::size_t i) {
    BitVector v(length);
    v.set(i);
    return v;
  }

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// Number of ones (Hamming weight).
  std::size_t popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  /// Standard inner product mod 2.
  bool dot(const BitVector& other) const {
    check_same_length(other);
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  /// Popcount of the intersection, without reducing mod 2.
  std::size_t overlap(const BitVector& other) const {
    check_same_length(other);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return total;
  }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  bool is_subset_of(const BitVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next_set(std::size_t from = 0) const {
    if (from >= length_) return length_;
    std::size_t w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) {
        return std::min(length_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      }
      if (++w >= words_.size()) return length_;
      cur = words_[w];
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = next_set(0); i < length_; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  /// Copy with coordinate `i` removed.
  BitVector without(std::size_t i) const {
    BitVector out(length_ - 1);
    for (std::size_t j = next_set(0); j < length_; j = next_set(j + 1)) {
      if (j != i) out.set(j < i ? j : j - 1);
    }
    return out;
  }

  /// Copy restricted to the given coordinates, in the given order.
  BitVector select(const std::vector<std::size_t>& coords) const {
    BitVector out(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (get(coords[k])) out.set(k);
    }
    return out;
  }

  /// Concatenation (this | tail).
  BitVector concat(const BitVector& tail) const {
    BitVector out(length_ + tail.length_);
    for (std::size_t i : indices()) out.set(i);
    for (std::size_t i : tail.indices()) out.set(length_ + i);
    return out;
  }

  BitVector slice(std::size_t begin, std::size_t count) const {
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (get(begin + i)) out.set(i);
    }
    return out;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i : indices()) s[i] = '1';
    return s;
  }

  const std::vector<Word>& words() const { return words_; }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  /// Orders by length, then by words (low coordinates least significant).
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(length_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same_length(const BitVector& other) const {
    if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  }

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  /// All rows must have length `cols`.
  BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (r.size() != cols_) throw std::invalid_argument("BitMatrix rows must share one length");
    }
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
  }

  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitMatrix m;
    m.cols_ = rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      m.rows_.push_back(BitVector::from_string(r));
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }

  void append_row(BitVector r) {
    if (rows_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix row length mismatch");
    rows_.push_back(std::move(r));
  }

  BitVector column(std::size_t c) const {
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(c)) out.set(r);
    }
    return out;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c : rows_[r].indices()) t.rows_[c].set(r);
    }
    return t;
  }

  /// M * v, with v indexed by columns.
  BitVector multiply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in M*v");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].dot(v)) out.set(r);
    }
    return out;
  }

  /// Row vector times matrix: sum of rows selected by `coeffs`.
  BitVector combine_rows(const BitVector& coeffs) const {
    if (coeffs.size() != rows_.size()) throw std::invalid_argument("dimension mismatch in c*M");
    BitVector out(cols_);
    for (std::size_t r : coeffs.indices()) out ^= rows_[r];
    return out;
  }

  /// M * other^T.
  BitMatrix multiply_transpose(const BitMatrix& other) const {
    if (other.cols_ != cols_) throw std::invalid_argument("dimension mismatch in M*N^T");
    BitMatrix out(rows_.size(), other.rows());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < other.rows(); ++j) {
        if (rows_[i].dot(other.rows_[j])) out.rows_[i].set(j);
      }
    }
    return out;
  }

  BitMatrix select_columns(const std::vector<std::size_t>& cols) const {
    BitMatrix out;
    out.cols_ = cols.size();
    for (const auto& r : rows_) out.rows_.push_back(r.select(cols));
    return out;
  }

  BitMatrix remove_column(std::size_t c) const {
    BitMatrix out;
    out.cols_ = cols_ - 1;
    for (const auto& r : rows_) out.rows_.push_back(r.without(c));
    return out;
  }

  BitMatrix remove_row(std::size_t r) const {
    BitMatrix out = *this;
    out.rows_.erase(out.rows_.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
  }

  /// Rows of `top` followed by rows of `bottom`.
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack column mismatch");
    BitMatrix out = top;
    out.rows_.insert(out.rows_.end(), bottom.rows_.begin(), bottom.rows_.end());
    return out;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
  }

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows_) {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivots are chosen at the lowest available row
/// index, so the output is a deterministic function of the input. Zero rows
/// are kept at the bottom; the shape is unchanged.
inline RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, 0, {}};
  BitMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && !a.get(sel, c)) ++sel;
    if (sel == a.rows()) continue;
    std::swap(a.row(sel), a.row(pivot_row));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != pivot_row && a.get(r, c)) a.row(r) ^= a.row(pivot_row);
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

/// Nonzero rows of the RREF: a canonical basis of the row space.
inline BitMatrix row_basis(const BitMatrix& m) {
  RrefResult r = rref(m);
  std::vector<BitVector> rows(r.reduced.row_vectors().begin(),
                              r.reduced.row_vectors().begin() + static_cast<std::ptrdiff_t>(r.rank));
  return BitMatrix(m.cols(), std::move(rows));
}

/// Basis (as rows) of {x : m x = 0}; one row per free column.
inline BitMatrix nullspace(const BitMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  BitMatrix basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (r.reduced.get(i, free)) v.set(r.pivot_cols[i]);
    }
    basis.append_row(std::move(v));
  }
  if (basis.rows() == 0) return BitMatrix(0, m.cols());
  return basis;
}

/// Incremental row-space membership against a fixed spanning set.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}
  explicit RowSpace(const BitMatrix& m) : cols_(m.cols()) {
    for (const auto& r : m.row_vectors()) insert(r);
  }

  std::size_t dimension() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduces v against the echelon basis.
  BitVector reduce(BitVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (v.get(pivots_[i])) v ^= basis_[i];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Adds v; returns false when v was already in the span.
  bool insert(const BitVector& v) {
    BitVector r = reduce(v);
    std::size_t p = r.next_set(0);
    if (p >= r.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].get(p)) basis_[i] ^= r;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  BitMatrix basis() const { return BitMatrix(cols_, basis_); }

 private:
  std::size_t cols_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

inline bool in_row_space(const BitMatrix& m, const BitVector& v) {
  return RowSpace(m).contains(v);
}

/// Row spaces equal (as subspaces of GF(2)^cols).
inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_basis(a) == row_basis(b);
}

/// Some x with a x = b, or nullopt. Free variables are set to zero.
inline std::optional<BitVector> solve_linear(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  BitMatrix aug;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector row = a.row(r).concat(BitVector(1));
    if (b.get(r)) row.set(a.cols());
    aug.append_row(std::move(row));
  }
  if (a.rows() == 0) return BitVector(a.cols());
  RrefResult red = rref(aug);
  BitVector x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivot_cols[i] == a.cols()) return std::nullopt;
    if (red.reduced.get(i, a.cols())) x.set(red.pivot_cols[i]);
  }
  return x;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<BitMatrix> inverse(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  BitMatrix aug;
  for (std::size_t r = 0; r < n; ++r) aug.append_row(m.row(r).concat(BitVector::unit(n, r)));
  if (n == 0) return BitMatrix();
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  BitMatrix inv;
  for (std::size_t r = 0; r < n; ++r) inv.append_row(red.reduced.row(r).slice(n, n));
  return inv;
}

/// Binary symplectic form on (x|z) vectors of length 2n:
/// a_x . b_z + a_z . b_x (mod 2). Zero iff the two Paulis commute.
inline bool symplectic_product(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) {
    throw std::invalid_argument("symplectic_product: operands must share an even length 2n");
  }
  const std::size_t n = a.size() / 2;
  const BitVector ax = a.slice(0, n), az = a.slice(n, n);
  const BitVector bx = b.slice(0, n), bz = b.slice(n, n);
  return ax.dot(bz) ^ az.dot(bx);
}

/// Calls f(v) for every vector in the span of `basis` (Gray-code order,
/// starting with zero). 2^rows calls.
template <typename F>
void for_each_in_span(const BitMatrix& basis, F&& f) {
  const std::size_t k = basis.rows();
  if (k >= 63) throw std::length_error("span too large to enumerate");
  BitVector cur(basis.cols());
  f(static_cast<const BitVector&>(cur));
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    f(static_cast<const BitVector&>(cur));
  }
}

/// Linear system over Z4 with one equation per row.
///
/// Coefficients are stored reduced mod 4. Callers normally supply 0/1
/// coefficients; any Z4 value is accepted.
class Mod4System {
 public:
  explicit Mod4System(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_equations() const { return rhs_.size(); }

  void add_equation(const std::vector<std::uint8_t>& coeffs, unsigned target) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("Mod4System: coefficient count");
    for (auto c : coeffs) coeffs_.push_back(static_cast<std::uint8_t>(c & 3U));
    rhs_.push_back(static_cast<std::uint8_t>(target & 3U));
  }

  /// Equation sum_j x_j a_j = target for a 0/1 coefficient vector.
  void add_equation(const BitVector& coeffs, unsigned target) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("Mod4System: coefficient count");
    for (std::size_t j = 0; j < num_vars_; ++j) coeffs_.push_back(coeffs.get(j) ? 1 : 0);
    rhs_.push_back(static_cast<std::uint8_t>(target & 3U));
  }

  std::uint8_t coeff(std::size_t eq, std::size_t var) const { return coeffs_[eq * num_vars_ + var]; }
  std::uint8_t target(std::size_t eq) const { return rhs_[eq]; }

  bool satisfied_by(const std::vector<std::uint8_t>& a) const {
    for (std::size_t e = 0; e < num_equations(); ++e) {
      unsigned s = 0;
      for (std::size_t j = 0; j < num_vars_; ++j) s += coeff(e, j) * a[j];
      if ((s & 3U) != rhs_[e]) return false;
    }
    return true;
  }

 private:
  friend std::optional<std::vector<std::uint8_t>> solve_mod4(const Mod4System& sys);
  std::size_t num_vars_;
  std::vector<std::uint8_t> coeffs_;
  std::vector<std::uint8_t> rhs_;
};

/// Solves a Z4 linear system exactly.
///
/// Unit pivots (1 or 3) are eliminated first, lowest column first. Rows left
/// over then have only even coefficients on the free columns; halving them
/// gives a GF(2) system on the parities of the free variables. Any solution
/// of that system lifts (free variable = its parity bit), and every Z4
/// solution projects onto one, so INFEASIBLE is exact.
inline std::optional<std::vector<std::uint8_t>> solve_mod4(const Mod4System& sys) {
  const std::size_t n = sys.num_vars_;
  const std::size_t m = sys.num_equations();
  std::vector<std::uint8_t> a = sys.coeffs_;
  std::vector<std::uint8_t> t = sys.rhs_;
  auto at = [&](std::size_t r, std::size_t c) -> std::uint8_t& { return a[r * n + c]; };

  std::vector<bool> used(m, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (!used[r] && (at(r, c) & 1U)) {
        sel = r;
        break;
      }
    }
    if (sel == m) continue;
    // Units of Z4 are self-inverse.
    const std::uint8_t inv = at(sel, c);
    for (std::size_t j = 0; j < n; ++j) at(sel, j) = static_cast<std::uint8_t>((at(sel, j) * inv) & 3U);
    t[sel] = static_cast<std::uint8_t>((t[sel] * inv) & 3U);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == sel || at(r, c) == 0) continue;
      const std::uint8_t f = at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        at(r, j) = static_cast<std::uint8_t>((at(r, j) + 4U * 4U - f * at(sel, j)) & 3U);
      }
      t[r] = static_cast<std::uint8_t>((t[r] + 4U * 4U - f * t[sel]) & 3U);
    }
    used[sel] = true;
    pivots.emplace_back(c, sel);
  }

  std::vector<bool> is_pivot_col(n, false);
  for (auto [c, r] : pivots) is_pivot_col[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot_col[c]) free_cols.push_back(c);
  }

  // Residual rows: every coefficient is even.
  BitMatrix half;
  BitVector half_rhs_bits;
  std::vector<bool> half_rhs;
  for (std::size_t r = 0; r < m; ++r) {
    if (used[r]) continue;
    if (t[r] & 1U) return std::nullopt;
    BitVector row(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      if (at(r, free_cols[k]) == 2) row.set(k);
    }
    if (row.none()) {
      if (t[r] != 0) return std::nullopt;
      continue;
    }
    half.append_row(std::move(row));
    half_rhs.push_back(t[r] == 2);
  }
  std::vector<std::uint8_t> sol(n, 0);
  if (half.rows() > 0) {
    BitVector rhs(half_rhs.size());
    for (std::size_t i = 0; i < half_rhs.size(); ++i) rhs.set(i, half_rhs[i]);
    auto parity = solve_linear(half, rhs);
    if (!parity) return std::nullopt;
    for (std::size_t k = 0; k < free_cols.size(); ++k) sol[free_cols[k]] = parity->get(k) ? 1 : 0;
  }
  for (auto [c, r] : pivots) {
    unsigned s = t[r];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) s += 4U * 4U - at(r, j) * sol[j];
    }
    sol[c] = static_cast<std::uint8_t>(s & 3U);
  }
  return sol;
}

}  // namespace stablulc

#endif  // STABLULC_GF2_HPP_
