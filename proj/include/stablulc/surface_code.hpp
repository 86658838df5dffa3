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

#ifndef STABLULC_SURFACE_CODE_HPP_
#define STABLULC_SURFACE_CODE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablulc/certificate.hpp"
#include "stablulc/embedded_graph.hpp"
#include "stablulc/gf2.hpp"
#include "stablulc/pauli.hpp"

namespace stablulc {

/// Surface code of an embedded graph: qubits on edges, A_v = X on the star
/// of v, B_f = Z on the boundary of f.
struct SurfaceCode {
  EmbeddedGraph graph;
  FaceSet faces;
  std::vector<PauliOperator> site_operators;  // one per vertex
  std::vector<PauliOperator> face_operators;  // one per face
  StabilizerGroup stabilizer;
  std::vector<PauliOperator> logical_x;  // paired with logical_z
  std::vector<PauliOperator> logical_z;
  bool has_loops = false;

  std::size_t num_qubits() const { return graph.num_edges(); }
  std::size_t num_logical() const { return logical_z.size(); }
};

/// Generators are the independent members of A_1..A_V, B_1..B_F taken
/// greedily in that order, which drops the last dependent vertex and face.
inline SurfaceCode build_code(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("build_code requires a connected graph");
  SurfaceCode code;
  code.graph = g;
  code.faces = trace_faces(g);
  const std::size_t n = g.num_edges();
  const BitMatrix inc = g.incidence_matrix();
  const BitMatrix fm = face_matrix(g, code.faces);
  for (const auto& r : inc.row_vectors()) code.site_operators.push_back(PauliOperator::x_type(r));
  for (const auto& r : fm.row_vectors()) code.face_operators.push_back(PauliOperator::z_type(r));
  for (std::size_t e = 0; e < n; ++e) code.has_loops |= g.is_loop(e);
  for (const auto& a : code.site_operators) {
    for (const auto& b : code.face_operators) {
      if (!a.commutes_with(b)) throw std::logic_error("site and face operators anticommute");
    }
  }
  RowSpace span(2 * n);
  std::vector<PauliOperator> gens;
  for (const auto* group : {&code.site_operators, &code.face_operators}) {
    for (const auto& p : *group) {
      if (span.insert(p.symplectic())) gens.push_back(p);
    }
  }
  code.stabilizer = StabilizerGroup(n, std::move(gens));
  HomologyBasis h = homology_logical_supports(g);
  for (std::size_t i = 0; i < h.num_pairs(); ++i) {
    code.logical_x.push_back(PauliOperator::x_type(h.x_classes.row(i)));
    code.logical_z.push_back(PauliOperator::z_type(h.z_classes.row(i)));
  }
  if (code.stabilizer.num_generators() + code.num_logical() != n) {
    throw std::logic_error("surface code generator count does not match homology");
  }
  return code;
}

/// Stabilizer of the code state fixed by X_1..X_l and Z_{l+1}..Z_k.
inline StabilizerGroup build_state(const SurfaceCode& code, std::size_t l) {
  if (l > code.num_logical()) {
    throw std::invalid_argument("logical split l=" + std::to_string(l) + " exceeds k=" +
                                std::to_string(code.num_logical()));
  }
  std::vector<PauliOperator> gens = code.stabilizer.generators();
  for (std::size_t i = 0; i < code.num_logical(); ++i) {
    gens.push_back(i < l ? code.logical_x[i] : code.logical_z[i]);
  }
  return StabilizerGroup(code.num_qubits(), std::move(gens));
}

struct CentralizerCheck {
  CertificateStatus status = CertificateStatus::kCertified;
  std::string reason;
  std::optional<BitVector> witness;  // violating support
  bool holds() const { return status == CertificateStatus::kCertified; }
};

/// Z-only centralizer elements are cycles and X-only ones are dual cycles.
/// Requires a graph without loops and coloops.
inline CentralizerCheck z_only_centralizer_check(const SurfaceCode& code) {
  CentralizerCheck out;
  const GirthCogirth gc = girth_and_cogirth(code.graph);
  if (gc.girth == 1 || gc.cogirth == 1) {
    out.status = CertificateStatus::kHypothesisFailed;
    out.reason = gc.girth == 1 ? "loop present" : "coloop present";
    return out;
  }
  const std::size_t n = code.num_qubits();
  BitMatrix xs(0, n), zs(0, n);
  for (const auto& g : code.stabilizer.generators()) {
    xs.append_row(g.x());
    zs.append_row(g.z());
  }
  const BitMatrix inc = code.graph.incidence_matrix();
  const BitMatrix fm = face_matrix(code.graph, code.faces);
  const BitMatrix z_centralizer = nullspace(xs);
  const BitMatrix x_centralizer = nullspace(zs);
  for (const auto& z : z_centralizer.row_vectors()) {
    if (inc.multiply(z).any()) {
      out.status = CertificateStatus::kFailed;
      out.reason = "Z-only centralizer element is not a cycle";
      out.witness = z;
      return out;
    }
  }
  for (const auto& x : x_centralizer.row_vectors()) {
    if (fm.multiply(x).any()) {
      out.status = CertificateStatus::kFailed;
      out.reason = "X-only centralizer element is not a cocycle";
      out.witness = x;
      return out;
    }
  }
  return out;
}

struct MinimalDecomposition {
  PauliOperator op;
  std::string source;  // "A:<vertex>" or "B:<face index>"
  std::vector<PauliOperator> parts;
  std::vector<std::uint64_t> uniqueness_counts;  // A_{supp(part)}
  std::vector<bool> part_is_minimal;
};

namespace detail {

inline void require_short_cycle_free(const EmbeddedGraph& g, const char* what) {
  const GirthCogirth gc = girth_and_cogirth(g);
  if (gc.girth <= 2 || gc.cogirth <= 2) {
    throw HypothesisError(std::string(what) + ": graph has a cycle or cocycle of length <= 2 (girth=" +
                          (gc.girth == kInfinite ? std::string("inf") : std::to_string(gc.girth)) + " cogirth=" +
                          (gc.cogirth == kInfinite ? std::string("inf") : std::to_string(gc.cogirth)) + ")");
  }
}

/// Lowest-weight nontrivial element of S_omega of the given Pauli type,
/// ties broken by canonical order.
inline std::optional<PauliOperator> lightest_of_type(const StabilizerGroup& s, const BitVector& omega, bool x_type) {
  std::optional<PauliOperator> best;
  subgroup_supported_in(s, omega).for_each_element([&](const PauliOperator& p) {
    if (p.is_identity() || (x_type ? !p.is_x_only() : !p.is_z_only())) return;
    if (!best || p.weight() < best->weight() || (p.weight() == best->weight() && p < *best)) best = p;
  });
  return best;
}

inline MinimalDecomposition decompose(const StabilizerGroup& s, const PauliOperator& op, bool x_type,
                                      std::string source) {
  MinimalDecomposition d{op, std::move(source), {}, {}, {}};
  PauliOperator current = op;
  current.set_negative(false);
  while (!current.is_identity()) {
    auto part = lightest_of_type(s, current.support_mask(), x_type);
    if (!part) throw std::logic_error("no same-type element inside the support of " + d.source);
    d.parts.push_back(*part);
    d.uniqueness_counts.push_back(count_support_eq(s, part->support_mask()));
    d.part_is_minimal.push_back(is_minimal_element(s, *part));
    current = current * *part;
    current.set_negative(false);
  }
  return d;
}

}  // namespace detail

/// Peels every A_v and B_f into minimal same-type elements of `s` (the code
/// stabilizer or one of its states).
inline std::vector<MinimalDecomposition> minimal_decompositions(const SurfaceCode& code, const StabilizerGroup& s) {
  detail::require_short_cycle_free(code.graph, "minimal_decompositions");
  std::vector<MinimalDecomposition> out;
  for (std::size_t v = 0; v < code.site_operators.size(); ++v) {
    if (code.site_operators[v].is_identity()) continue;
    out.push_back(detail::decompose(s, code.site_operators[v], true, "A:" + code.graph.vertex_labels()[v]));
  }
  for (std::size_t f = 0; f < code.face_operators.size(); ++f) {
    if (code.face_operators[f].is_identity()) continue;
    out.push_back(detail::decompose(s, code.face_operators[f], false, "B:f" + std::to_string(f)));
  }
  return out;
}

inline std::string count_or_inf(std::size_t v) { return v == kInfinite ? "inf" : std::to_string(v); }

/// LU=LC certificate for the surface code state with logical split l.
inline Certificate lulc_certificate(const SurfaceCode& code, std::size_t l) {
  Certificate c;
  c.theorem = "surfaceCode";
  const GirthCogirth gc = girth_and_cogirth(code.graph);
  if (gc.girth <= 2 || gc.cogirth <= 2) {
    c.status = CertificateStatus::kHypothesisFailed;
    c.details = "girth=" + count_or_inf(gc.girth) + " cogirth=" + count_or_inf(gc.cogirth);
    return c;
  }
  const StabilizerGroup s = build_state(code, l);
  const auto decomps = minimal_decompositions(code, s);
  std::vector<PauliOperator> parts;
  for (const auto& d : decomps) {
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      if (!d.part_is_minimal[i] || d.uniqueness_counts[i] != 1) {
        c.status = CertificateStatus::kFailed;
        c.details = "decomposition of " + d.source + " has a non-unique or non-minimal part";
        return c;
      }
      parts.push_back(d.parts[i]);
    }
  }
  const MinimalElementReport report = make_minimal_report(s.num_qubits(), std::move(parts));
  const Certificate msc = msc_certificate(s, &report);
  if (!msc.certified()) {
    c.status = CertificateStatus::kFailed;
    c.details = "msc re-check: " + msc.details;
    return c;
  }
  c.status = CertificateStatus::kCertified;
  std::ostringstream os;
  os << "n=" << s.num_qubits() << " k=" << code.num_logical() << " l=" << l << " girth=" << gc.girth
     << " cogirth=" << gc.cogirth << " minimal_parts=" << report.elements.size() << " msc=" << msc.details;
  c.details = os.str();
  return c;
}

struct TransversalPrecondition {
  std::uint64_t b_omega = 1;
  std::size_t dim_s_omega = 0;
  std::uint64_t a_omega = 0;
  bool minimal_support = false;
  /// omega is a minimal support with A_omega = 1: a transversal logical gate
  /// must conjugate its unique element to itself.
  bool fixed = false;
};

inline TransversalPrecondition transversal_precondition_report(const SurfaceCode& code, const BitVector& omega) {
  const StabilizerGroup& s = code.stabilizer;
  TransversalPrecondition r;
  r.dim_s_omega = subgroup_dimension(s, omega);
  r.b_omega = count_support_in(s, omega);
  r.a_omega = omega.any() ? count_support_eq(s, omega) : 1;
  if (omega.any() && r.a_omega > 0) {
    r.minimal_support = true;
    for (std::size_t i : omega.indices()) {
      BitVector smaller = omega;
      smaller.set(i, false);
      if (subgroup_dimension(s, smaller) > 0) {
        r.minimal_support = false;
        break;
      }
    }
  }
  r.fixed = r.minimal_support && r.a_omega == 1;
  return r;
}

struct TransversalReport {
  std::vector<bool> x_fixed_cover;  // qubit lies in a fixed X-type minimal element
  std::vector<bool> z_fixed_cover;
  std::vector<bool> forced_clifford;
  std::size_t fixed_elements = 0;
  bool no_non_clifford_transversal = false;

  std::string conclusion() const {
    return no_non_clifford_transversal ? "no non-Clifford transversal gate"
                                       : "inconclusive: some qubit is not forced Clifford";
  }
};

/// Aggregates the precondition over all minimal parts of the site and face
/// operators of the code stabilizer.
inline TransversalReport full_transversal_report(const SurfaceCode& code) {
  const std::size_t n = code.num_qubits();
  TransversalReport r;
  r.x_fixed_cover.assign(n, false);
  r.z_fixed_cover.assign(n, false);
  r.forced_clifford.assign(n, false);
  for (const auto& d : minimal_decompositions(code, code.stabilizer)) {
    for (const auto& part : d.parts) {
      TransversalPrecondition p = transversal_precondition_report(code, part.support_mask());
      if (!p.fixed) continue;
      ++r.fixed_elements;
      auto& cover = part.is_x_only() ? r.x_fixed_cover : r.z_fixed_cover;
      for (std::size_t q : part.support()) cover[q] = true;
    }
  }
  r.no_non_clifford_transversal = n > 0;
  for (std::size_t q = 0; q < n; ++q) {
    r.forced_clifford[q] = r.x_fixed_cover[q] && r.z_fixed_cover[q];
    r.no_non_clifford_transversal &= r.forced_clifford[q];
  }
  return r;
}

/// Graph state with K_v = X_v prod_{u in N(v)} Z_u. `adjacency` must be
/// symmetric and loop-free.
inline StabilizerGroup graph_state(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<PauliOperator> gens;
  for (std::size_t v = 0; v < n; ++v) {
    BitVector x = BitVector::unit(n, v), z(n);
    for (std::size_t u : adjacency[v]) {
      if (u == v) throw std::invalid_argument("graph state adjacency has a loop");
      z.flip(u);
    }
    gens.emplace_back(std::move(x), std::move(z));
  }
  return StabilizerGroup(n, std::move(gens));
}

/// Neighbours in the m x n rectangular grid; vertex (r,c) has index r*n + c.
inline std::vector<std::vector<std::size_t>> grid_adjacency(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<std::vector<std::size_t>> adj(m * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t v = r * n + c;
      if (r > 0) adj[v].push_back(v - n);
      if (c > 0) adj[v].push_back(v - 1);
      if (c + 1 < n) adj[v].push_back(v + 1);
      if (r + 1 < m) adj[v].push_back(v + n);
    }
  }
  return adj;
}

inline StabilizerGroup grid_cluster_state(std::size_t m, std::size_t n) { return graph_state(grid_adjacency(m, n)); }

/// True when the simple graph has no 3-cycles and no 4-cycles.
inline bool has_no_short_cycles(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : adjacency[v]) adj[v][u] = adj[u][v] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (std::size_t c = 0; c < n; ++c) common += adj[a][c] && adj[b][c];
      if (adj[a][b] && common > 0) return false;  // triangle
      if (common >= 2) return false;              // 4-cycle a-c-b-c'
    }
  }
  return true;
}

/// Minimality of K_v for a graph state, checked on the local group
/// <K_u : u in N[v]>, which contains every element supported in N[v].
inline bool graph_state_generator_minimal(const StabilizerGroup& s,
                                          const std::vector<std::vector<std::size_t>>& adjacency, std::size_t v) {
  std::vector<std::size_t> closed = adjacency[v];
  closed.push_back(v);
  std::sort(closed.begin(), closed.end());
  const BitVector supp = s.generators()[v].support_mask();
  require_enumerable(closed.size(), "grid local enumeration");
  const std::uint64_t total = std::uint64_t{1} << closed.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    PauliOperator p(s.num_qubits());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      if ((mask >> i) & 1U) p = p * s.generators()[closed[i]];
    }
    const BitVector ps = p.support_mask();
    if (ps != supp && ps.is_subset_of(supp)) return false;
  }
  return true;
}

inline Certificate grid_minimality_certificate(std::size_t m, std::size_t n) {
  Certificate c;
  c.theorem = "grid";
  const auto adj = grid_adjacency(m, n);
  const StabilizerGroup s = graph_state(adj);
  for (std::size_t v = 0; v < m * n; ++v) {
    if (!graph_state_generator_minimal(s, adj, v)) {
      c.status = CertificateStatus::kFailed;
      c.details = "vertex=(" + std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) + ") not minimal";
      return c;
    }
  }
  // Every K_v is minimal, so the generators lie in M(psi).
  const MinimalElementReport report = make_minimal_report(s.num_qubits(), s.generators());
  const Certificate msc = msc_certificate(s, &report);
  if (!msc.certified()) {
    c.status = CertificateStatus::kFailed;
    c.details = msc.details;
    return c;
  }
  c.status = CertificateStatus::kCertified;
  c.details = "rows=" + std::to_string(m) + " cols=" + std::to_string(n) +
              " minimal_generators=" + std::to_string(m * n) + " msc=" + msc.details;
  return c;
}

}  // namespace stablulc

#endif  // STABLULC_SURFACE_CODE_HPP_
