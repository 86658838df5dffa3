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

#ifndef STABLULC_EMBEDDED_GRAPH_HPP_
#define STABLULC_EMBEDDED_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stablulc/gf2.hpp"

namespace stablulc {

/// Sentinel for "no cycle" / "no cocycle".
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

/// Multigraph with a rotation system.
///
/// Each edge e has two half-edges (darts): 2e sits at the first endpoint and
/// 2e+1 at the second. A loop puts both darts in one rotation. The rotation
/// of a vertex is the cyclic order of its darts.
class EmbeddedGraph {
 public:
  using Ends = std::pair<std::size_t, std::size_t>;

  EmbeddedGraph() = default;
  EmbeddedGraph(std::vector<std::string> vertex_labels, std::vector<std::string> edge_labels,
                std::vector<Ends> ends, std::vector<std::vector<std::size_t>> rotation)
      : vertex_labels_(std::move(vertex_labels)),
        edge_labels_(std::move(edge_labels)),
        ends_(std::move(ends)),
        rotation_(std::move(rotation)) {
    validate();
  }

  std::size_t num_vertices() const { return vertex_labels_.size(); }
  std::size_t num_edges() const { return edge_labels_.size(); }
  std::size_t num_darts() const { return 2 * edge_labels_.size(); }

  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  const std::vector<Ends>& ends() const { return ends_; }
  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_[v]; }

  static std::size_t edge_of(std::size_t dart) { return dart / 2; }
  static std::size_t twin(std::size_t dart) { return dart ^ 1U; }

  std::size_t dart_vertex(std::size_t dart) const {
    const Ends& e = ends_[edge_of(dart)];
    return (dart & 1U) ? e.second : e.first;
  }
  /// Successor of `dart` in the rotation of its vertex.
  std::size_t sigma(std::size_t dart) const {
    const auto& rot = rotation_[dart_vertex(dart)];
    return rot[(position_[dart] + 1) % rot.size()];
  }
  std::size_t sigma_inverse(std::size_t dart) const {
    const auto& rot = rotation_[dart_vertex(dart)];
    return rot[(position_[dart] + rot.size() - 1) % rot.size()];
  }
  /// Next dart along a face boundary.
  std::size_t phi(std::size_t dart) const { return sigma(twin(dart)); }

  bool is_loop(std::size_t e) const { return ends_[e].first == ends_[e].second; }

  std::optional<std::size_t> find_edge(const std::string& label) const {
    for (std::size_t e = 0; e < edge_labels_.size(); ++e) {
      if (edge_labels_[e] == label) return e;
    }
    return std::nullopt;
  }
  std::size_t edge_index(const std::string& label) const {
    auto e = find_edge(label);
    if (!e) throw std::out_of_range("unknown edge '" + label + "'");
    return *e;
  }
  std::optional<std::size_t> find_vertex(const std::string& label) const {
    for (std::size_t v = 0; v < vertex_labels_.size(); ++v) {
      if (vertex_labels_[v] == label) return v;
    }
    return std::nullopt;
  }

  std::string dart_name(std::size_t dart) const {
    return edge_labels_[edge_of(dart)] + ((dart & 1U) ? ".1" : ".0");
  }

  /// Vertex-edge incidence over GF(2); loops give zero columns.
  BitMatrix incidence_matrix() const {
    BitMatrix m(num_vertices(), num_edges());
    for (std::size_t e = 0; e < num_edges(); ++e) {
      m.row(ends_[e].first).flip(e);
      m.row(ends_[e].second).flip(e);
    }
    return m;
  }

  /// Number of connected components (isolated vertices count).
  std::size_t num_components() const {
    std::vector<std::size_t> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t comps = num_vertices();
    for (const auto& [u, v] : ends_) {
      std::size_t a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps;
  }
  bool is_connected() const { return num_vertices() > 0 && num_components() == 1; }

 private:
  void validate() {
    if (ends_.size() != edge_labels_.size()) throw std::invalid_argument("edge label/endpoint count mismatch");
    if (rotation_.size() != vertex_labels_.size()) {
      throw std::invalid_argument("rotation count does not match vertex count");
    }
    check_distinct(vertex_labels_, "vertex");
    check_distinct(edge_labels_, "edge");
    for (const auto& [u, v] : ends_) {
      if (u >= num_vertices() || v >= num_vertices()) throw std::invalid_argument("edge endpoint out of range");
    }
    position_.assign(num_darts(), kInfinite);
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        const std::size_t d = rotation_[v][i];
        if (d >= num_darts()) throw std::invalid_argument("rotation names an unknown half-edge");
        if (position_[d] != kInfinite) {
          throw std::invalid_argument("half-edge " + dart_name(d) + " appears twice in the rotation system");
        }
        if (dart_vertex(d) != v) {
          throw std::invalid_argument("half-edge " + dart_name(d) + " listed at vertex " + vertex_labels_[v] +
                                      " but belongs to " + vertex_labels_[dart_vertex(d)]);
        }
        position_[d] = i;
      }
    }
    for (std::size_t d = 0; d < num_darts(); ++d) {
      if (position_[d] == kInfinite) {
        throw std::invalid_argument("half-edge " + dart_name(d) + " missing from the rotation system");
      }
    }
  }

  static void check_distinct(const std::vector<std::string>& labels, const char* kind) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw std::invalid_argument(std::string("duplicate ") + kind + " label '" + *dup + "'");
  }

  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  std::vector<Ends> ends_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> position_;
};

/// Incremental builder addressing vertices and edges by label.
class EmbeddedGraphBuilder {
 public:
  std::size_t add_vertex(const std::string& label) {
    vertices_.push_back(label);
    rotation_.emplace_back();
    return vertices_.size() - 1;
  }
  std::size_t add_edge(const std::string& label, std::size_t u, std::size_t v) {
    edges_.push_back(label);
    ends_.emplace_back(u, v);
    return edges_.size() - 1;
  }
  /// Appends a dart (2e + side) to the rotation of its vertex.
  void push_dart(std::size_t vertex, std::size_t dart) { rotation_.at(vertex).push_back(dart); }
  void set_rotation(std::size_t vertex, std::vector<std::size_t> darts) { rotation_.at(vertex) = std::move(darts); }

  /// Edges added with add_edge get their darts appended in insertion order
  /// when no rotation was set for the vertex.
  EmbeddedGraph build() const {
    auto rot = rotation_;
    std::vector<bool> explicit_rot(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v) explicit_rot[v] = !rot[v].empty();
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      if (!explicit_rot[ends_[e].first]) rot[ends_[e].first].push_back(2 * e);
      if (!explicit_rot[ends_[e].second]) rot[ends_[e].second].push_back(2 * e + 1);
    }
    return EmbeddedGraph(vertices_, edges_, ends_, rot);
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> edges_;
  std::vector<EmbeddedGraph::Ends> ends_;
  std::vector<std::vector<std::size_t>> rotation_;
};

/// Faces as closed dart walks. Isolated vertices contribute one empty face
/// each, listed after the others.
struct FaceSet {
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> face_of_dart;
  std::vector<std::size_t> isolated_vertex;  // per face: the isolated vertex, or kInfinite

  std::size_t size() const { return faces.size(); }
};

/// Traces phi = sigma o theta orbits, each started at its smallest dart.
inline FaceSet trace_faces(const EmbeddedGraph& g) {
  FaceSet fs;
  fs.face_of_dart.assign(g.num_darts(), kInfinite);
  for (std::size_t start = 0; start < g.num_darts(); ++start) {
    if (fs.face_of_dart[start] != kInfinite) continue;
    const std::size_t f = fs.faces.size();
    std::vector<std::size_t> walk;
    std::size_t d = start;
    do {
      if (fs.face_of_dart[d] != kInfinite) throw std::logic_error("malformed rotation system");
      fs.face_of_dart[d] = f;
      walk.push_back(d);
      d = g.phi(d);
    } while (d != start);
    fs.faces.push_back(std::move(walk));
    fs.isolated_vertex.push_back(kInfinite);
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.rotation(v).empty()) {
      fs.faces.emplace_back();
      fs.isolated_vertex.push_back(v);
    }
  }
  return fs;
}

/// Face-edge incidence: an edge is in the boundary of f when f traverses it
/// an odd number of times.
inline BitMatrix face_matrix(const EmbeddedGraph& g, const FaceSet& fs) {
  BitMatrix m(fs.size(), g.num_edges());
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (std::size_t d : fs.faces[f]) m.row(f).flip(EmbeddedGraph::edge_of(d));
  }
  return m;
}
inline BitMatrix face_matrix(const EmbeddedGraph& g) { return face_matrix(g, trace_faces(g)); }

/// Genus of the embedding surface from Euler's formula.
inline std::size_t embedding_genus(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("embedding_genus requires a connected graph");
  const long chi = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) +
                   static_cast<long>(trace_faces(g).size());
  if (chi > 2 || (2 - chi) % 2 != 0) throw std::logic_error("Euler characteristic inconsistent with an orientable surface");
  return static_cast<std::size_t>((2 - chi) / 2);
}

/// Dual embedding: one vertex per face ("f<index>"), same edge labels,
/// rotation at a face vertex = the face walk.
inline EmbeddedGraph dual(const EmbeddedGraph& g) {
  FaceSet fs = trace_faces(g);
  std::vector<std::string> vlabels;
  for (std::size_t f = 0; f < fs.size(); ++f) vlabels.push_back("f" + std::to_string(f));
  std::vector<EmbeddedGraph::Ends> ends;
  for (std::size_t e = 0; e < g.num_edges(); ++e) ends.emplace_back(fs.face_of_dart[2 * e], fs.face_of_dart[2 * e + 1]);
  return EmbeddedGraph(std::move(vlabels), g.edge_labels(), std::move(ends), fs.faces);
}

inline EmbeddedGraph delete_edge(const EmbeddedGraph& g, std::size_t e) {
  if (e >= g.num_edges()) throw std::out_of_range("delete_edge: unknown edge");
  auto remap = [e](std::size_t d) {
    const std::size_t de = EmbeddedGraph::edge_of(d);
    return de > e ? d - 2 : d;
  };
  std::vector<std::string> elabels;
  std::vector<EmbeddedGraph::Ends> ends;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (k == e) continue;
    elabels.push_back(g.edge_labels()[k]);
    ends.push_back(g.ends()[k]);
  }
  std::vector<std::vector<std::size_t>> rot(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t d : g.rotation(v)) {
      if (EmbeddedGraph::edge_of(d) != e) rot[v].push_back(remap(d));
    }
  }
  return EmbeddedGraph(g.vertex_labels(), std::move(elabels), std::move(ends), std::move(rot));
}

inline EmbeddedGraph delete_edge(const EmbeddedGraph& g, const std::string& label) {
  return delete_edge(g, g.edge_index(label));
}

/// How contract_edge treats loops.
enum class LoopPolicy {
  /// Contracting a loop deletes it (the matroid convention).
  kDelete,
  /// Ribbon-graph contraction: a loop with rotation (h A h' B) at its vertex
  /// splits that vertex into two with rotations A and B. With this policy
  /// contraction is dual to deletion for every edge.
  kRibbon,
};

inline EmbeddedGraph contract_edge(const EmbeddedGraph& g, std::size_t e,
                                   LoopPolicy policy = LoopPolicy::kDelete) {
  if (e >= g.num_edges()) throw std::out_of_range("contract_edge: unknown edge");
  if (g.is_loop(e) && policy == LoopPolicy::kDelete) return delete_edge(g, e);

  const std::size_t h = 2 * e, h2 = 2 * e + 1;
  auto remap = [e](std::size_t d) { return EmbeddedGraph::edge_of(d) > e ? d - 2 : d; };
  // Rotation of `v` read cyclically starting just after `from`, up to `to`.
  auto arc = [&](std::size_t v, std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    const auto& rot = g.rotation(v);
    std::size_t i = std::find(rot.begin(), rot.end(), from) - rot.begin();
    for (std::size_t step = 1; step < rot.size(); ++step) {
      const std::size_t d = rot[(i + step) % rot.size()];
      if (d == to) break;
      out.push_back(d);
    }
    return out;
  };

  std::vector<std::string> vlabels = g.vertex_labels();
  std::vector<EmbeddedGraph::Ends> ends = g.ends();
  std::vector<std::vector<std::size_t>> rot;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) rot.push_back(g.rotation(v));

  if (g.is_loop(e)) {
    const std::size_t v = g.ends()[e].first;
    std::vector<std::size_t> a = arc(v, h, h2);
    std::vector<std::size_t> b = arc(v, h2, h);
    std::string label = vlabels[v] + "'";
    while (std::find(vlabels.begin(), vlabels.end(), label) != vlabels.end()) label += "'";
    const std::size_t w = vlabels.size();
    vlabels.push_back(label);
    for (std::size_t d : b) {
      auto& end = ends[EmbeddedGraph::edge_of(d)];
      ((d & 1U) ? end.second : end.first) = w;
    }
    rot[v] = a;
    rot.push_back(b);
  } else {
    const std::size_t u = g.ends()[e].first, v = g.ends()[e].second;
    std::vector<std::size_t> merged = arc(u, h, h);
    std::vector<std::size_t> b = arc(v, h2, h2);
    merged.insert(merged.end(), b.begin(), b.end());
    rot[u] = merged;
    rot.erase(rot.begin() + static_cast<std::ptrdiff_t>(v));
    vlabels.erase(vlabels.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& [a, c] : ends) {
      if (a == v) a = u;
      if (c == v) c = u;
      if (a > v) --a;
      if (c > v) --c;
    }
  }
  std::vector<std::string> elabels;
  std::vector<EmbeddedGraph::Ends> new_ends;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (k == e) continue;
    elabels.push_back(g.edge_labels()[k]);
    new_ends.push_back(ends[k]);
  }
  for (auto& r : rot) {
    for (auto& d : r) d = remap(d);
  }
  return EmbeddedGraph(std::move(vlabels), std::move(elabels), std::move(new_ends), std::move(rot));
}

inline EmbeddedGraph contract_edge(const EmbeddedGraph& g, const std::string& label,
                                   LoopPolicy policy = LoopPolicy::kDelete) {
  return contract_edge(g, g.edge_index(label), policy);
}

/// Embedded isomorphism preserving edge labels. Each connected component may
/// be mapped orientation-preserving or reversing. Intended for small graphs.
inline bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto isolated = [](const EmbeddedGraph& g) {
    std::size_t c = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) c += g.rotation(v).empty();
    return c;
  };
  if (isolated(a) != isolated(b)) return false;
  std::vector<std::size_t> edge_map(a.num_edges());
  {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t e = 0; e < b.num_edges(); ++e) index[b.edge_labels()[e]] = e;
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
      auto it = index.find(a.edge_labels()[e]);
      if (it == index.end()) return false;
      edge_map[e] = it->second;
    }
  }
  std::vector<std::size_t> image(a.num_darts(), kInfinite);
  for (std::size_t seed = 0; seed < a.num_darts(); ++seed) {
    if (image[seed] != kInfinite) continue;
    bool found = false;
    for (int flip = 0; flip < 2 && !found; ++flip) {
      for (int reverse = 0; reverse < 2 && !found; ++reverse) {
        std::vector<std::size_t> trial = image;
        std::deque<std::size_t> queue;
        bool ok = true;
        auto assign = [&](std::size_t d, std::size_t target) {
          if (EmbeddedGraph::edge_of(target) != edge_map[EmbeddedGraph::edge_of(d)]) return false;
          if (trial[d] == kInfinite) {
            trial[d] = target;
            queue.push_back(d);
            return true;
          }
          return trial[d] == target;
        };
        ok = assign(seed, 2 * edge_map[EmbeddedGraph::edge_of(seed)] + static_cast<std::size_t>((seed & 1U) ^ flip));
        while (ok && !queue.empty()) {
          const std::size_t d = queue.front();
          queue.pop_front();
          const std::size_t fd = trial[d];
          ok = assign(EmbeddedGraph::twin(d), EmbeddedGraph::twin(fd)) &&
               assign(a.sigma(d), reverse ? b.sigma_inverse(fd) : b.sigma(fd));
        }
        if (ok) {
          image = std::move(trial);
          found = true;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Row-space basis of the incidence matrix.
inline BitMatrix cut_space(const EmbeddedGraph& g) {
  if (g.num_vertices() == 0) return BitMatrix(0, g.num_edges());
  return row_basis(g.incidence_matrix());
}

/// Null space of the incidence matrix.
inline BitMatrix cycle_space(const EmbeddedGraph& g) {
  if (g.num_vertices() == 0) return BitMatrix::identity(g.num_edges());
  return nullspace(g.incidence_matrix());
}

/// Length of a shortest cycle (loops: 1, parallel edges: 2), or kInfinite.
inline std::size_t girth(const EmbeddedGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) return 1;
    adj[g.ends()[e].first].emplace_back(g.ends()[e].second, e);
    adj[g.ends()[e].second].emplace_back(g.ends()[e].first, e);
  }
  std::size_t best = kInfinite;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [s, t] = g.ends()[e];
    std::vector<std::size_t> dist(g.num_vertices(), kInfinite);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty() && dist[t] == kInfinite) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (auto [y, via] : adj[x]) {
        if (via == e || dist[y] != kInfinite) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[t] != kInfinite) best = std::min(best, dist[t] + 1);
  }
  return best;
}

struct GirthCogirth {
  std::size_t girth = kInfinite;
  std::size_t cogirth = kInfinite;
};

/// Shortest cycle of g and shortest cycle of its dual (a cocycle). Dual
/// cycles include the homologically nontrivial ones.
inline GirthCogirth girth_and_cogirth(const EmbeddedGraph& g) { return {girth(g), girth(dual(g))}; }

/// Paired homology bases: x_classes are cocycles (dual cycles modulo cuts),
/// z_classes are cycles modulo face boundaries, with x_i . z_j = delta_ij.
struct HomologyBasis {
  BitMatrix x_classes;
  BitMatrix z_classes;
  std::size_t num_pairs() const { return z_classes.rows(); }
};

namespace detail {

/// Rows of `space` extending a basis of `sub` to one of span(sub + space),
/// chosen greedily in row order.
inline BitMatrix quotient_basis(const BitMatrix& space, const BitMatrix& sub, std::size_t cols) {
  RowSpace span(cols);
  for (const auto& r : sub.row_vectors()) span.insert(r);
  BitMatrix out(0, cols);
  for (const auto& r : space.row_vectors()) {
    if (span.insert(r)) out.append_row(r);
  }
  return out;
}

}  // namespace detail

inline HomologyBasis homology_logical_supports(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("homology_logical_supports requires a connected graph");
  const std::size_t m = g.num_edges();
  HomologyBasis out{BitMatrix(0, m), BitMatrix(0, m)};
  if (m == 0) return out;
  const BitMatrix faces = face_matrix(g);
  const BitMatrix inc = g.incidence_matrix();
  BitMatrix z = detail::quotient_basis(nullspace(inc), faces, m);
  BitMatrix x = detail::quotient_basis(nullspace(faces), inc, m);
  if (x.rows() != z.rows()) throw std::logic_error("homology ranks disagree");
  if (z.rows() == 0) return out;
  BitMatrix pairing = x.multiply_transpose(z);
  auto inv = inverse(pairing);
  if (!inv) throw std::logic_error("homology pairing is degenerate");
  for (std::size_t i = 0; i < x.rows(); ++i) out.x_classes.append_row(x.combine_rows(inv->row(i)));
  out.z_classes = std::move(z);
  return out;
}

/// Torus grid with rows*cols vertices p<r>_<c>, horizontal edges h<r>_<c>
/// from (r,c) to (r,c+1) and vertical edges v<r>_<c> from (r,c) to (r+1,c),
/// indices mod the grid size. Rotation at each vertex: east, north, west,
/// south.
inline EmbeddedGraph toric_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("toric_grid needs positive dimensions");
  EmbeddedGraphBuilder b;
  auto vid = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b.add_vertex("p" + std::to_string(r) + "_" + std::to_string(c));
  }
  auto hid = [&](std::size_t r, std::size_t c) { return 2 * vid(r, c); };
  auto vvid = [&](std::size_t r, std::size_t c) { return 2 * vid(r, c) + 1; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      b.add_edge("h" + std::to_string(r) + "_" + std::to_string(c), vid(r, c), vid(r, (c + 1) % cols));
      b.add_edge("v" + std::to_string(r) + "_" + std::to_string(c), vid(r, c), vid((r + 1) % rows, c));
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t west = (c + cols - 1) % cols, south = (r + rows - 1) % rows;
      b.set_rotation(vid(r, c), {2 * hid(r, c), 2 * vvid(r, c), 2 * hid(r, west) + 1, 2 * vvid(south, c) + 1});
    }
  }
  return b.build();
}

/// Adds a parallel copy `label` of edge `e`, placed right after e's darts in
/// both rotations (a 2-cycle bounding a new digon face).
inline EmbeddedGraph double_edge(const EmbeddedGraph& g, std::size_t e, const std::string& label) {
  std::vector<std::string> elabels = g.edge_labels();
  std::vector<EmbeddedGraph::Ends> ends = g.ends();
  elabels.push_back(label);
  ends.push_back(g.ends()[e]);
  const std::size_t ne = g.num_edges();
  std::vector<std::vector<std::size_t>> rot;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::size_t> r;
    for (std::size_t d : g.rotation(v)) {
      if (d == 2 * e + 1) r.push_back(2 * ne + 1);
      r.push_back(d);
      if (d == 2 * e) r.push_back(2 * ne);
    }
    rot.push_back(std::move(r));
  }
  return EmbeddedGraph(g.vertex_labels(), std::move(elabels), std::move(ends), std::move(rot));
}

}  // namespace stablulc

#endif  // STABLULC_EMBEDDED_GRAPH_HPP_
