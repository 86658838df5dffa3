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

#ifndef STABLULC_MATROID_HPP_
#define STABLULC_MATROID_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stablulc/certificate.hpp"
#include "stablulc/embedded_graph.hpp"
#include "stablulc/gf2.hpp"
#include "stablulc/limits.hpp"

namespace stablulc {

inline constexpr std::size_t kIsomorphismCap = 12;
inline constexpr std::size_t kMinorSearchCap = 15;

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Vector matroid of the columns of a binary matrix. The representation is
/// kept as an rref row basis, so it is determined by the row space.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  BinaryMatroid(const BitMatrix& rep, std::vector<std::string> labels)
      : rep_(row_basis(rep)), labels_(std::move(labels)) {
    if (labels_.size() != rep.cols()) {
      throw std::invalid_argument("matroid has " + std::to_string(rep.cols()) + " columns but " +
                                  std::to_string(labels_.size()) + " labels");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("matroid labels are not distinct");
  }

  const BitMatrix& representation() const { return rep_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rep_.rows(); }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  std::size_t index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw std::invalid_argument("unknown matroid element '" + label + "'");
    return *i;
  }

 private:
  BitMatrix rep_;
  std::vector<std::string> labels_;
};

inline BinaryMatroid from_matrix(const BitMatrix& m, std::vector<std::string> labels) {
  return BinaryMatroid(m, std::move(labels));
}
inline BinaryMatroid from_matrix(const BitMatrix& m) { return BinaryMatroid(m, default_labels(m.cols())); }

inline BinaryMatroid cycle_matroid(const EmbeddedGraph& g) {
  return BinaryMatroid(g.incidence_matrix(), g.edge_labels());
}

inline BinaryMatroid delete_element(const BinaryMatroid& m, std::size_t e) {
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(e));
  return BinaryMatroid(m.representation().remove_column(e), std::move(labels));
}
inline BinaryMatroid delete_element(const BinaryMatroid& m, const std::string& label) {
  return delete_element(m, m.index_of(label));
}

/// Pivots on column e and drops the pivot row and the column. A loop is
/// simply deleted.
inline BinaryMatroid contract_element(const BinaryMatroid& m, std::size_t e) {
  BitMatrix rep = m.representation();
  std::optional<std::size_t> pivot;
  for (std::size_t r = 0; r < rep.rows(); ++r) {
    if (rep.get(r, e)) {
      pivot = r;
      break;
    }
  }
  if (pivot) {
    const BitVector p = rep.row(*pivot);
    for (std::size_t r = 0; r < rep.rows(); ++r) {
      if (r != *pivot && rep.get(r, e)) rep.row(r) ^= p;
    }
    rep = rep.remove_row(*pivot);
  }
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(e));
  return BinaryMatroid(rep.remove_column(e), std::move(labels));
}
inline BinaryMatroid contract_element(const BinaryMatroid& m, const std::string& label) {
  return contract_element(m, m.index_of(label));
}

inline BinaryMatroid dual(const BinaryMatroid& m) { return BinaryMatroid(nullspace(m.representation()), m.labels()); }

/// Same ground labels and the same row space after aligning columns.
inline bool equals(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() ||
      std::set<std::string>(a.labels().begin(), a.labels().end()) !=
          std::set<std::string>(b.labels().begin(), b.labels().end())) {
    throw std::invalid_argument("matroid equality needs identical ground labels");
  }
  std::vector<std::size_t> order;
  for (const auto& l : a.labels()) order.push_back(b.index_of(l));
  return same_row_space(a.representation(), b.representation().select_columns(order));
}

namespace detail {

/// Column vectors as row-bit masks; rank <= 32 is required.
inline std::vector<std::uint32_t> column_masks(const BitMatrix& rep) {
  if (rep.rows() > 32) throw CapExceeded("matroid rank", rep.rows(), 32);
  std::vector<std::uint32_t> cols(rep.cols(), 0);
  for (std::size_t r = 0; r < rep.rows(); ++r) {
    for (std::size_t c : rep.row(r).indices()) cols[c] |= std::uint32_t{1} << r;
  }
  return cols;
}

/// Incremental GF(2) echelon basis over 32-bit vectors.
class MaskBasis {
 public:
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::uint32_t b : basis_) v = std::min(v, v ^ b);
    return v;
  }
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (v == 0) return false;
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
    return true;
  }
  std::size_t size() const { return basis_.size(); }

 private:
  std::vector<std::uint32_t> basis_;  // distinct leading bits, descending
};

/// Basis of the zero-sum subsets of `cols`, as masks over their indices.
inline std::vector<std::uint32_t> dependency_basis(const std::vector<std::uint32_t>& cols) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> basis;  // (vector, combination)
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::uint32_t v = cols[i], comb = std::uint32_t{1} << i;
    for (const auto& [bv, bc] : basis) {
      if ((v ^ bv) < v) {
        v ^= bv;
        comb ^= bc;
      }
    }
    if (v == 0) {
      out.push_back(comb);
    } else {
      basis.emplace_back(v, comb);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return out;
}

inline std::vector<std::uint32_t> span_of(const std::vector<std::uint32_t>& basis) {
  require_enumerable(basis.size(), "cycle space enumeration");
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t b : basis) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

inline std::vector<std::size_t> weight_enumerator(const std::vector<std::uint32_t>& basis, std::size_t n) {
  std::vector<std::size_t> w(n + 1, 0);
  for (std::uint32_t v : span_of(basis)) ++w[static_cast<std::size_t>(std::popcount(v))];
  return w;
}

/// Minimal nonempty supports in the span of `basis`.
inline std::vector<std::uint32_t> circuits_from_basis(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> all = span_of(basis);
  std::sort(all.begin(), all.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint32_t> out;
  for (std::uint32_t v : all) {
    if (v == 0) continue;
    bool dominated = false;
    for (std::uint32_t c : out) {
      if ((c & v) == c) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(v);
  }
  return out;
}

/// Searches for a bijection of n elements mapping circuits of a onto
/// circuits of b.
inline std::optional<std::vector<std::size_t>> circuit_isomorphism(std::size_t n, const std::vector<std::uint32_t>& ca,
                                                                   const std::vector<std::uint32_t>& cb) {
  if (ca.size() != cb.size()) return std::nullopt;
  auto signature = [n](const std::vector<std::uint32_t>& cs) {
    std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n + 1, 0));
    for (std::uint32_t c : cs) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((c >> i) & 1U) ++sig[i][static_cast<std::size_t>(std::popcount(c))];
      }
    }
    return sig;
  };
  const auto sa = signature(ca), sb = signature(cb);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  const std::unordered_set<std::uint32_t> target(cb.begin(), cb.end());
  // Circuits of a grouped by their highest element: checked once that element is placed.
  std::vector<std::vector<std::uint32_t>> closing(n);
  for (std::uint32_t c : ca) closing[static_cast<std::size_t>(31 - std::countl_zero(c))].push_back(c);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto mapped = [&](std::uint32_t c) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((c >> i) & 1U) out |= std::uint32_t{1} << image[i];
    }
    return out;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sa[i] != sb[j]) continue;
      image[i] = j;
      bool ok = true;
      for (std::uint32_t c : closing[i]) {
        if (!target.count(mapped(c))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

inline void require_size(const BinaryMatroid& m, std::size_t cap, const char* what) {
  if (m.size() > cap) {
    throw CapExceeded(std::string(what) + " element count", m.size(), cap);
  }
}

inline std::vector<std::uint32_t> circuit_masks(const BinaryMatroid& m) {
  if (m.size() > 32) throw CapExceeded("circuit mask element count", m.size(), 32);
  return circuits_from_basis(dependency_basis(column_masks(m.representation())));
}

}  // namespace detail

/// Circuits as index sets, ordered by size then lexicographically by mask.
inline std::vector<std::vector<std::size_t>> circuits(const BinaryMatroid& m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t c : detail::circuit_masks(m)) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if ((c >> i) & 1U) idx.push_back(i);
    }
    out.push_back(std::move(idx));
  }
  return out;
}

inline bool is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  detail::require_size(a, kIsomorphismCap, "isomorphism test");
  detail::require_size(b, kIsomorphismCap, "isomorphism test");
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return detail::circuit_isomorphism(a.size(), detail::circuit_masks(a), detail::circuit_masks(b)).has_value();
}

struct MinorWitness {
  std::vector<std::string> deleted;
  std::vector<std::string> contracted;
};

namespace detail {

/// Calls f(mask) for every k-subset of the indices in `pool`, in
/// lexicographic order of index sequences; stops when f returns true.
template <typename F>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t k, F&& f) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> chosen;
    for (std::size_t i : pick) chosen.push_back(pool[i]);
    if (f(chosen)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

/// Lexicographically least (kept set, contracted set) realising `target` as
/// a minor of m, with every other element deleted.
inline std::optional<MinorWitness> find_minor(const BinaryMatroid& m, const BinaryMatroid& target) {
  detail::require_size(m, kMinorSearchCap, "minor search");
  detail::require_size(target, kIsomorphismCap, "minor search target");
  const std::size_t n = m.size(), t = target.size(), r = m.rank(), rt = target.rank();
  if (t > n || rt > r || t - rt > n - r) return std::nullopt;
  const std::size_t k = r - rt;
  const auto cols = detail::column_masks(m.representation());
  const auto target_deps = detail::dependency_basis(detail::column_masks(target.representation()));
  const auto target_weights = detail::weight_enumerator(target_deps, t);
  const auto target_circuits = detail::circuits_from_basis(target_deps);

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::optional<MinorWitness> found;
  detail::for_each_combination(all, t, [&](const std::vector<std::size_t>& kept) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::binary_search(kept.begin(), kept.end(), i)) rest.push_back(i);
    }
    return detail::for_each_combination(rest, k, [&](const std::vector<std::size_t>& contracted) {
      detail::MaskBasis span;
      for (std::size_t c : contracted) {
        if (!span.insert(cols[c])) return false;
      }
      std::vector<std::uint32_t> reduced;
      detail::MaskBasis minor_span;
      for (std::size_t i : kept) {
        reduced.push_back(span.reduce(cols[i]));
        minor_span.insert(reduced.back());
      }
      if (minor_span.size() != rt) return false;
      const auto deps = detail::dependency_basis(reduced);
      if (detail::weight_enumerator(deps, t) != target_weights) return false;
      if (!detail::circuit_isomorphism(t, target_circuits, detail::circuits_from_basis(deps))) return false;
      MinorWitness w;
      for (std::size_t c : contracted) w.contracted.push_back(m.labels()[c]);
      for (std::size_t d : rest) {
        if (!std::binary_search(contracted.begin(), contracted.end(), d)) w.deleted.push_back(m.labels()[d]);
      }
      found = std::move(w);
      return true;
    });
  });
  return found;
}

inline bool has_minor(const BinaryMatroid& m, const BinaryMatroid& target) { return find_minor(m, target).has_value(); }

struct NamedMatroid {
  std::string name;
  BinaryMatroid matroid;
};

/// Incidence matrix of K_n with edges (i,j), i<j, in lexicographic order.
inline BitMatrix complete_graph_incidence(std::size_t n) {
  BitMatrix m(n, n * (n - 1) / 2);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      m.set(i, e);
      m.set(j, e);
    }
  }
  return m;
}

inline BitMatrix complete_bipartite_incidence(std::size_t a, std::size_t b) {
  BitMatrix m(a + b, a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      m.set(i, i * b + j);
      m.set(a + j, i * b + j);
    }
  }
  return m;
}

inline BinaryMatroid fano() {
  BitMatrix m(3, 7);
  for (std::size_t c = 0; c < 7; ++c) {
    for (std::size_t r = 0; r < 3; ++r) m.set(r, c, ((c + 1) >> r) & 1U);
  }
  return from_matrix(m);
}

inline const std::vector<NamedMatroid>& excluded_minor_catalog() {
  static const std::vector<NamedMatroid> catalog = [] {
    const BinaryMatroid f7 = fano();
    const BinaryMatroid k5 = from_matrix(complete_graph_incidence(5));
    const BinaryMatroid k33 = from_matrix(complete_bipartite_incidence(3, 3));
    return std::vector<NamedMatroid>{{"F7", f7},         {"F7*", dual(f7)},      {"M(K5)", k5},
                                     {"M*(K5)", dual(k5)}, {"M(K3,3)", k33}, {"M*(K3,3)", dual(k33)}};
  }();
  return catalog;
}

inline const NamedMatroid& catalog_entry(const std::string& name) {
  for (const auto& e : excluded_minor_catalog()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown catalog matroid '" + name + "'");
}

struct ExcludedMinorHit {
  std::string name;
  MinorWitness witness;
};

/// First excluded minor found, in catalog order, for graphic (or cographic)
/// matroids.
inline std::optional<ExcludedMinorHit> excluded_minor(const BinaryMatroid& m, bool cographic) {
  static const char* const kGraphic[] = {"F7", "F7*", "M*(K5)", "M*(K3,3)"};
  static const char* const kCographic[] = {"F7", "F7*", "M(K5)", "M(K3,3)"};
  for (const char* name : cographic ? kCographic : kGraphic) {
    if (auto w = find_minor(m, catalog_entry(name).matroid)) return ExcludedMinorHit{name, std::move(*w)};
  }
  return std::nullopt;
}

inline bool is_graphic(const BinaryMatroid& m) { return !excluded_minor(m, false).has_value(); }
inline bool is_cographic(const BinaryMatroid& m) { return !excluded_minor(m, true).has_value(); }

/// Vector matroid of S_X for a surface code state: the chosen logical
/// cocycles stacked on the vertex incidence rows.
inline BinaryMatroid surface_code_matroid(const EmbeddedGraph& g, const std::vector<BitVector>& chosen) {
  const BitMatrix inc = g.incidence_matrix();
  const BitMatrix fm = face_matrix(g);
  RowSpace cuts(g.num_edges());
  for (const auto& r : inc.row_vectors()) cuts.insert(r);
  BitMatrix rep(0, g.num_edges());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const BitVector& c = chosen[i];
    if (c.size() != g.num_edges() || fm.multiply(c).any()) {
      throw std::invalid_argument("chosen cocycle " + std::to_string(i + 1) + " is not a cocycle");
    }
    if (!cuts.insert(c)) {
      throw std::invalid_argument("chosen cocycle " + std::to_string(i + 1) + " is trivial or dependent");
    }
    rep.append_row(c);
  }
  for (const auto& r : inc.row_vectors()) rep.append_row(r);
  return BinaryMatroid(rep, g.edge_labels());
}

struct MinorClosureResult {
  bool cocycles_valid = true;
  bool deletion_holds = false;
  bool contraction_holds = false;
  bool holds() const { return cocycles_valid && deletion_holds && contraction_holds; }
};

/// Checks M\e = M(Gamma\e) and M/e = M(Gamma/e) with the chosen cocycles
/// carried to each minor. Carried cocycles are validated against the cycle
/// space of the corresponding dual minor, where a dual loop is contracted by
/// deletion so that Gamma\e keeps the handle as a non-cellular face.
inline MinorClosureResult minor_closure_check(const EmbeddedGraph& g, std::size_t e,
                                              const std::vector<BitVector>& chosen) {
  if (g.num_edges() <= 1) throw std::invalid_argument("minor closure needs at least two edges");
  const BinaryMatroid m = surface_code_matroid(g, chosen);
  const EmbeddedGraph gd = dual(g);
  MinorClosureResult out;

  auto stack = [](const std::vector<BitVector>& cocycles, const BitMatrix& inc) {
    BitMatrix rep(0, inc.cols());
    for (const auto& c : cocycles) rep.append_row(c);
    for (const auto& r : inc.row_vectors()) rep.append_row(r);
    return rep;
  };
  auto all_cycles_in = [](const std::vector<BitVector>& cocycles, const EmbeddedGraph& dual_minor) {
    const BitMatrix inc = dual_minor.incidence_matrix();
    return std::all_of(cocycles.begin(), cocycles.end(), [&](const BitVector& c) { return inc.multiply(c).none(); });
  };

  std::vector<BitVector> carried_del;
  for (const auto& c : chosen) carried_del.push_back(c.without(e));
  const EmbeddedGraph g_del = delete_edge(g, e);
  out.cocycles_valid &= all_cycles_in(carried_del, contract_edge(gd, e, LoopPolicy::kDelete));
  out.deletion_holds =
      equals(delete_element(m, e), BinaryMatroid(stack(carried_del, g_del.incidence_matrix()), g_del.edge_labels()));

  std::vector<BitVector> carried_con;
  if (!g.is_loop(e)) {
    const BitVector star = g.incidence_matrix().row(g.ends()[e].first);
    for (const auto& c : chosen) carried_con.push_back((c.get(e) ? c ^ star : c).without(e));
  } else {
    std::optional<BitVector> first;
    for (const auto& c : chosen) {
      if (c.get(e) && !first) {
        first = c;
        continue;
      }
      carried_con.push_back((c.get(e) ? c ^ *first : c).without(e));
    }
  }
  const EmbeddedGraph g_con = contract_edge(g, e, LoopPolicy::kDelete);
  out.cocycles_valid &= all_cycles_in(carried_con, delete_edge(gd, e));
  out.contraction_holds =
      equals(contract_element(m, e), BinaryMatroid(stack(carried_con, g_con.incidence_matrix()), g_con.edge_labels()));
  return out;
}

enum class CssScreenOutcome { kRuledOutGraphic, kRuledOutCographic, kInconclusive };

struct CssScreenResult {
  CssScreenOutcome outcome = CssScreenOutcome::kInconclusive;
  std::size_t distance = 0;
  std::size_t dual_distance = 0;
  std::optional<ExcludedMinorHit> graphic_obstruction;
  std::optional<ExcludedMinorHit> cographic_obstruction;

  std::string to_string() const {
    switch (outcome) {
      case CssScreenOutcome::kRuledOutGraphic:
        return "RULED_OUT graphic";
      case CssScreenOutcome::kRuledOutCographic:
        return "RULED_OUT cographic";
      case CssScreenOutcome::kInconclusive:
        break;
    }
    return "INCONCLUSIVE";
  }
};

inline std::size_t min_nonzero_weight(const BitMatrix& m) {
  const BitMatrix basis = row_basis(m);
  require_enumerable(basis.rows(), "distance enumeration");
  std::size_t best = kInfinite;
  for_each_in_span(basis, [&](const BitVector& v) {
    if (v.any()) best = std::min(best, v.popcount());
  });
  return best;
}

/// Screens the CSS state with X-part rowspace(G) and Z-part rowspace(H).
inline CssScreenResult css_counterexample_screen(const BitMatrix& g, const BitMatrix& h) {
  if (g.cols() != h.cols()) throw std::invalid_argument("G and H have different lengths");
  if (!g.multiply_transpose(h).is_zero()) throw std::invalid_argument("G and H are not orthogonal");
  if (rank(g) + rank(h) != g.cols()) throw std::invalid_argument("rank(G) + rank(H) must equal n for a state");
  CssScreenResult r;
  r.distance = min_nonzero_weight(g);
  r.dual_distance = min_nonzero_weight(h);
  if (r.distance < 3 || r.dual_distance < 3) {
    throw HypothesisError("distance hypothesis fails: d=" + std::to_string(r.distance) +
                          " d_perp=" + std::to_string(r.dual_distance) + " (need both >= 3)");
  }
  const BinaryMatroid m = from_matrix(g);
  r.graphic_obstruction = excluded_minor(m, false);
  if (!r.graphic_obstruction) {
    r.outcome = CssScreenOutcome::kRuledOutGraphic;
    return r;
  }
  r.cographic_obstruction = excluded_minor(m, true);
  r.outcome = r.cographic_obstruction ? CssScreenOutcome::kInconclusive : CssScreenOutcome::kRuledOutCographic;
  return r;
}

}  // namespace stablulc

#endif  // STABLULC_MATROID_HPP_
