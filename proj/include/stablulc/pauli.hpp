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

#ifndef STABLULC_PAULI_HPP_
#define STABLULC_PAULI_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stablulc/certificate.hpp"
#include "stablulc/gf2.hpp"
#include "stablulc/limits.hpp"

namespace stablulc {

/// Hermitian n-qubit Pauli operator: sign times a tensor product of I/X/Y/Z.
///
/// Stored as (x|z) bits. Qubit i carries X^{x_i} Z^{z_i} with an extra factor
/// i when both bits are set, so (1,1) is exactly Y.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVector x, BitVector z, bool negative = false)
      : x_(std::move(x)), z_(std::move(z)), negative_(negative) {
    if (x_.size() != z_.size()) throw std::invalid_argument("Pauli x/z length mismatch");
  }

  /// Parses "+XIZ", "-YY", "XX". Accepts the unicode minus sign as well.
  static PauliOperator parse(std::string_view text) {
    bool negative = false;
    if (text.starts_with("−")) {
      negative = true;
      text.remove_prefix(std::string_view("−").size());
    } else if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
      negative = text[0] == '-';
      text.remove_prefix(1);
    }
    PauliOperator p(text.size());
    p.negative_ = negative;
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'I':
          break;
        case 'X':
          p.x_.set(i);
          break;
        case 'Z':
          p.z_.set(i);
          break;
        case 'Y':
          p.x_.set(i);
          p.z_.set(i);
          break;
        default:
          throw std::invalid_argument(std::string("invalid Pauli letter '") + text[i] + "'");
      }
    }
    return p;
  }

  static PauliOperator x_type(const BitVector& support) {
    return PauliOperator(support, BitVector(support.size()));
  }
  static PauliOperator z_type(const BitVector& support) {
    return PauliOperator(BitVector(support.size()), support);
  }

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  bool negative() const { return negative_; }
  void set_negative(bool negative) { negative_ = negative; }

  char letter(std::size_t i) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_.get(i) ? 1 : 0) | (z_.get(i) ? 2 : 0)];
  }

  BitVector support_mask() const { return x_ | z_; }
  std::vector<std::size_t> support() const { return support_mask().indices(); }
  std::size_t weight() const { return support_mask().popcount(); }

  bool is_identity() const { return x_.none() && z_.none(); }
  bool is_x_only() const { return z_.none(); }
  bool is_z_only() const { return x_.none(); }

  /// (x|z) as one vector of length 2n.
  BitVector symplectic() const { return x_.concat(z_); }

  bool commutes_with(const PauliOperator& other) const {
    return !(x_.dot(other.z_) ^ z_.dot(other.x_));
  }

  /// Product this * other. Throws if the operands anticommute (the product
  /// would carry a factor of i).
  PauliOperator operator*(const PauliOperator& other) const {
    if (!commutes_with(other)) throw std::invalid_argument("product of anticommuting Paulis");
    BitVector x3 = x_ ^ other.x_;
    BitVector z3 = z_ ^ other.z_;
    const long e = static_cast<long>(x_.overlap(z_)) + static_cast<long>(other.x_.overlap(other.z_)) +
                   2 * static_cast<long>(z_.overlap(other.x_)) - static_cast<long>(x3.overlap(z3)) +
                   2 * ((negative_ ? 1 : 0) + (other.negative_ ? 1 : 0));
    const long m = ((e % 4) + 4) % 4;
    return PauliOperator(std::move(x3), std::move(z3), m == 2);
  }

  std::string to_string() const {
    std::string s(1, negative_ ? '-' : '+');
    for (std::size_t i = 0; i < num_qubits(); ++i) s += letter(i);
    return s;
  }

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) = default;

  /// Canonical order: by symplectic bit pattern, then sign.
  friend bool operator<(const PauliOperator& a, const PauliOperator& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c < 0;
    if (auto c = a.z_ <=> b.z_; c != 0) return c < 0;
    return a.negative_ < b.negative_;
  }

 private:
  BitVector x_;
  BitVector z_;
  bool negative_ = false;
};

/// Abelian group of Paulis given by independent commuting generators,
/// with -I excluded. Serves both as a code stabilizer (k < n) and as a
/// state stabilizer (k = n).
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  StabilizerGroup(std::size_t n, std::vector<PauliOperator> generators)
      : n_(n), generators_(std::move(generators)) {
    RowSpace span(2 * n_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].num_qubits() != n_) {
        throw std::invalid_argument("generator " + std::to_string(i + 1) + " has wrong length");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (!generators_[i].commutes_with(generators_[j])) {
          throw std::invalid_argument("generators " + std::to_string(j + 1) + " and " +
                                      std::to_string(i + 1) + " anticommute");
        }
      }
      // Independence of the bit patterns also rules out -I in the group.
      if (!span.insert(generators_[i].symplectic())) {
        throw std::invalid_argument("generator " + std::to_string(i + 1) + " is dependent");
      }
    }
  }

  static StabilizerGroup from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty generator list");
    std::vector<PauliOperator> gens;
    for (const auto& r : rows) gens.push_back(PauliOperator::parse(r));
    const std::size_t n = gens.front().num_qubits();
    return StabilizerGroup(n, std::move(gens));
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t num_generators() const { return generators_.size(); }
  bool is_state() const { return generators_.size() == n_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }

  /// Rows (x|z) of the generators.
  BitMatrix symplectic_matrix() const {
    BitMatrix m(0, 2 * n_);
    for (const auto& g : generators_) m.append_row(g.symplectic());
    return m;
  }

  /// Product of the generators selected by `coeffs`.
  PauliOperator product(const BitVector& coeffs) const {
    PauliOperator acc(n_);
    for (std::size_t i : coeffs.indices()) acc = acc * generators_[i];
    return acc;
  }

  /// Group membership of the bit pattern (sign ignored).
  bool contains_pattern(const PauliOperator& p) const {
    return RowSpace(symplectic_matrix()).contains(p.symplectic());
  }

  /// Calls f on all 2^k elements, starting with the identity.
  template <typename F>
  void for_each_element(F&& f, std::uint64_t cap = enumeration_cap()) const {
    require_enumerable(generators_.size(), "stabilizer enumeration", cap);
    PauliOperator cur(n_);
    f(static_cast<const PauliOperator&>(cur));
    const std::uint64_t total = std::uint64_t{1} << generators_.size();
    for (std::uint64_t i = 1; i < total; ++i) {
      cur = cur * generators_[static_cast<std::size_t>(std::countr_zero(i))];
      f(static_cast<const PauliOperator&>(cur));
    }
  }

  std::vector<PauliOperator> elements(std::uint64_t cap = enumeration_cap()) const {
    std::vector<PauliOperator> out;
    for_each_element([&](const PauliOperator& p) { out.push_back(p); }, cap);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : generators_) out.push_back(g.to_string());
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> generators_;
};

inline BitVector index_mask(std::size_t n, const std::vector<std::size_t>& omega) {
  BitVector m(n);
  for (std::size_t i : omega) {
    if (i >= n) throw std::out_of_range("qubit index out of range");
    m.set(i);
  }
  return m;
}

/// Basis of S_omega = {g in S : supp(g) within omega}, by elimination on the
/// coordinates outside omega.
inline StabilizerGroup subgroup_supported_in(const StabilizerGroup& s, const BitVector& omega) {
  const std::size_t n = s.num_qubits();
  const std::size_t k = s.num_generators();
  BitMatrix outside_t(0, k);  // rows: outside coordinates (x then z), cols: generators
  for (std::size_t q = 0; q < n; ++q) {
    if (omega.get(q)) continue;
    BitVector xr(k), zr(k);
    for (std::size_t g = 0; g < k; ++g) {
      if (s.generators()[g].x().get(q)) xr.set(g);
      if (s.generators()[g].z().get(q)) zr.set(g);
    }
    outside_t.append_row(std::move(xr));
    outside_t.append_row(std::move(zr));
  }
  BitMatrix coeffs = outside_t.rows() == 0 ? BitMatrix::identity(k) : nullspace(outside_t);
  std::vector<PauliOperator> gens;
  for (const auto& c : coeffs.row_vectors()) gens.push_back(s.product(c));
  return StabilizerGroup(n, std::move(gens));
}

inline StabilizerGroup subgroup_supported_in(const StabilizerGroup& s,
                                             const std::vector<std::size_t>& omega) {
  return subgroup_supported_in(s, index_mask(s.num_qubits(), omega));
}

inline std::size_t subgroup_dimension(const StabilizerGroup& s, const BitVector& omega) {
  return subgroup_supported_in(s, omega).num_generators();
}

/// A_omega: number of elements whose support is exactly omega.
inline std::uint64_t count_support_eq(const StabilizerGroup& s, const BitVector& omega) {
  std::uint64_t count = 0;
  subgroup_supported_in(s, omega).for_each_element([&](const PauliOperator& p) {
    if (p.support_mask() == omega) ++count;
  });
  return count;
}
inline std::uint64_t count_support_eq(const StabilizerGroup& s, const std::vector<std::size_t>& omega) {
  return count_support_eq(s, index_mask(s.num_qubits(), omega));
}

/// B_omega: number of elements supported inside omega, 2^{dim S_omega}.
inline std::uint64_t count_support_in(const StabilizerGroup& s, const BitVector& omega) {
  const std::size_t d = subgroup_dimension(s, omega);
  require_enumerable(d, "count_support_in");
  return std::uint64_t{1} << d;
}
inline std::uint64_t count_support_in(const StabilizerGroup& s, const std::vector<std::size_t>& omega) {
  return count_support_in(s, index_mask(s.num_qubits(), omega));
}

/// Local minimality test: g (nontrivial, in S) is minimal iff no nontrivial
/// element lives on supp(g) with one qubit removed.
inline bool is_minimal_element(const StabilizerGroup& s, const PauliOperator& g) {
  if (g.is_identity()) return false;
  BitVector supp = g.support_mask();
  for (std::size_t i : supp.indices()) {
    BitVector smaller = supp;
    smaller.set(i, false);
    if (subgroup_dimension(s, smaller) > 0) return false;
  }
  return true;
}

/// Per-qubit letter sets, bit 0 = X, bit 1 = Y, bit 2 = Z.
enum LetterBits : std::uint8_t { kLetterX = 1, kLetterY = 2, kLetterZ = 4, kAllLetters = 7 };

inline std::string letters_to_string(std::uint8_t bits) {
  std::string s;
  if (bits & kLetterX) s += 'X';
  if (bits & kLetterY) s += 'Y';
  if (bits & kLetterZ) s += 'Z';
  return s.empty() ? "-" : s;
}

struct MinimalElementReport {
  std::vector<PauliOperator> elements;
  std::vector<std::vector<std::size_t>> supports;
  /// Letters occurring at each qubit in the group generated by `elements`.
  std::vector<std::uint8_t> covered_letters;
};

/// Builds the report for a given list of minimal elements; covered letters
/// come from the span of their single-qubit projections.
inline MinimalElementReport make_minimal_report(std::size_t n, std::vector<PauliOperator> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  MinimalElementReport r;
  r.covered_letters.assign(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    bool seen[4] = {false, false, false, false};
    for (const auto& e : elements) seen[(e.x().get(q) ? 1 : 0) | (e.z().get(q) ? 2 : 0)] = true;
    int dim = 0;
    unsigned first = 0;
    for (unsigned v = 1; v < 4; ++v) {
      if (!seen[v]) continue;
      if (first == 0) {
        first = v;
        dim = 1;
      } else if (v != first) {
        dim = 2;
      }
    }
    if (dim == 2) {
      r.covered_letters[q] = kAllLetters;
    } else if (dim == 1) {
      r.covered_letters[q] = first == 1 ? kLetterX : first == 2 ? kLetterZ : kLetterY;
    }
  }
  for (const auto& e : elements) r.supports.push_back(e.support());
  r.elements = std::move(elements);
  return r;
}

/// Exactly the minimal-support elements, by full enumeration under the cap.
inline MinimalElementReport minimal_elements(const StabilizerGroup& s,
                                             std::uint64_t cap = enumeration_cap()) {
  std::map<BitVector, std::vector<PauliOperator>> by_support;
  s.for_each_element(
      [&](const PauliOperator& p) {
        if (!p.is_identity()) by_support[p.support_mask()].push_back(p);
      },
      cap);
  std::vector<BitVector> supports;
  for (const auto& [supp, _] : by_support) supports.push_back(supp);
  std::stable_sort(supports.begin(), supports.end(), [](const BitVector& a, const BitVector& b) {
    return a.popcount() < b.popcount();
  });
  // Any non-minimal support strictly contains a minimal one.
  std::vector<BitVector> minimal;
  for (const auto& supp : supports) {
    bool dominated = false;
    for (const auto& m : minimal) {
      if (m != supp && m.is_subset_of(supp)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(supp);
  }
  std::vector<PauliOperator> elements;
  for (const auto& m : minimal) {
    for (const auto& p : by_support[m]) elements.push_back(p);
  }
  return make_minimal_report(s.num_qubits(), std::move(elements));
}

/// Minimum weight of a nonidentity element.
inline std::size_t distance(const StabilizerGroup& s, std::uint64_t cap = enumeration_cap()) {
  std::size_t best = 0;
  s.for_each_element(
      [&](const PauliOperator& p) {
        const std::size_t w = p.weight();
        if (w > 0 && (best == 0 || w < best)) best = w;
      },
      cap);
  return best;
}

struct BellPairResult {
  bool free = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // 0-based qubits
};

/// A pair {i,j} is a Bell pair when S carries a full two-qubit factor on it
/// (dim S_{ij} = 2) that is entangled (dim S_i = dim S_j = 0). The witness is
/// the lexicographically first such pair.
inline BellPairResult is_bell_pair_free(const StabilizerGroup& s) {
  const std::size_t n = s.num_qubits();
  std::vector<std::size_t> single(n);
  for (std::size_t i = 0; i < n; ++i) single[i] = subgroup_dimension(s, BitVector::unit(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    if (single[i] != 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (single[j] != 0) continue;
      BitVector pair = BitVector::unit(n, i);
      pair.set(j);
      if (subgroup_dimension(s, pair) == 2) return {false, std::make_pair(i, j)};
    }
  }
  return {true, std::nullopt};
}

/// Minimal Support Condition certificate. When `minimal` is given it is used
/// as the minimal-element set instead of full enumeration.
inline Certificate msc_certificate(const StabilizerGroup& s,
                                   const MinimalElementReport* minimal = nullptr,
                                   std::uint64_t cap = enumeration_cap()) {
  Certificate c;
  c.theorem = "msc";
  if (!s.is_state()) {
    c.status = CertificateStatus::kInconclusive;
    c.details = "not-a-state k=" + std::to_string(s.num_generators()) +
                " n=" + std::to_string(s.num_qubits());
    return c;
  }
  BellPairResult bell = is_bell_pair_free(s);
  if (!bell.free) {
    c.status = CertificateStatus::kInconclusive;
    c.details = "bell_pair=" + std::to_string(bell.witness->first + 1) + "," +
                std::to_string(bell.witness->second + 1);
    return c;
  }
  MinimalElementReport computed;
  if (minimal == nullptr) {
    computed = minimal_elements(s, cap);
    minimal = &computed;
  }
  for (std::size_t q = 0; q < s.num_qubits(); ++q) {
    const std::uint8_t have = minimal->covered_letters[q];
    for (auto [bit, name] : {std::pair{kLetterX, 'X'}, {kLetterY, 'Y'}, {kLetterZ, 'Z'}}) {
      if (!(have & bit)) {
        c.status = CertificateStatus::kInconclusive;
        c.details = "qubit=" + std::to_string(q + 1) + " missing=" + std::string(1, name);
        return c;
      }
    }
  }
  c.status = CertificateStatus::kCertified;
  c.details = "variant=bell-pair-free minimal_elements=" + std::to_string(minimal->elements.size());
  return c;
}

struct CssSplit {
  bool is_css = false;
  std::vector<PauliOperator> x_generators;  // basis of the X-only subgroup
  std::vector<PauliOperator> z_generators;  // basis of the Z-only subgroup
};

inline CssSplit is_css(const StabilizerGroup& s) {
  const std::size_t k = s.num_generators();
  const std::size_t n = s.num_qubits();
  BitMatrix xt(n, k), zt(n, k);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t q : s.generators()[g].x().indices()) xt.set(q, g);
    for (std::size_t q : s.generators()[g].z().indices()) zt.set(q, g);
  }
  CssSplit out;
  // X-only elements: combinations cancelling every z bit, and vice versa.
  const BitMatrix x_combos = nullspace(zt);
  const BitMatrix z_combos = nullspace(xt);
  for (const auto& c : x_combos.row_vectors()) out.x_generators.push_back(s.product(c));
  for (const auto& c : z_combos.row_vectors()) out.z_generators.push_back(s.product(c));
  out.is_css = out.x_generators.size() + out.z_generators.size() == k;
  return out;
}

}  // namespace stablulc

#endif  // STABLULC_PAULI_HPP_
