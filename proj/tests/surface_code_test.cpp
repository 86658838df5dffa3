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

#include "stablulc/surface_code.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

namespace stablulc {
namespace {

using testing::complete_graph;
using testing::triangle_with_bridge;

EmbeddedGraph reshuffled(const EmbeddedGraph& g, std::mt19937_64& rng) {
  EmbeddedGraphBuilder b;
  for (const auto& v : g.vertex_labels()) b.add_vertex(v);
  for (std::size_t e = 0; e < g.num_edges(); ++e) b.add_edge(g.edge_labels()[e], g.ends()[e].first, g.ends()[e].second);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto rot = g.rotation(v);
    std::shuffle(rot.begin(), rot.end(), rng);
    b.set_rotation(v, rot);
  }
  return b.build();
}

TEST(SurfaceCode, ToricGridParameters) {
  const SurfaceCode code = build_code(toric_grid(3, 3));
  EXPECT_EQ(code.num_qubits(), 18U);
  EXPECT_EQ(code.num_logical(), 2U);
  EXPECT_EQ(code.stabilizer.num_generators(), 16U);
  EXPECT_FALSE(code.has_loops);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(code.logical_x[i].commutes_with(code.logical_z[j]), i != j);
    }
    for (const auto& g : code.stabilizer.generators()) {
      EXPECT_TRUE(g.commutes_with(code.logical_x[i]));
      EXPECT_TRUE(g.commutes_with(code.logical_z[i]));
    }
  }
  EXPECT_EQ(distance(code.stabilizer), 4U);
}

TEST(SurfaceCode, BuildStateIsAState) {
  const SurfaceCode code = build_code(toric_grid(3, 3));
  for (std::size_t l = 0; l <= 2; ++l) EXPECT_TRUE(build_state(code, l).is_state());
  EXPECT_THROW(build_state(code, 3), std::invalid_argument);
}

TEST(SurfaceCode, PlanarTriangleHasNoLogicals) {
  const SurfaceCode code = build_code(testing::triangle());
  EXPECT_EQ(code.num_logical(), 0U);
  EXPECT_TRUE(code.stabilizer.is_state());
}

TEST(SurfaceCode, CentralizerMatchesBruteForce) {
  std::mt19937_64 rng(41);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const EmbeddedGraph g = testing::random_embedded_graph(rng, 5, 10, false);
    if (!g.is_connected() || g.num_edges() > 12) continue;
    const GirthCogirth gc = girth_and_cogirth(g);
    if (gc.girth < 2 || gc.cogirth < 2) continue;
    const SurfaceCode code = build_code(g);
    ASSERT_TRUE(z_only_centralizer_check(code).holds());
    const BitMatrix inc = g.incidence_matrix();
    const BitMatrix fm = face_matrix(g);
    const std::size_t n = g.num_edges();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      BitVector v(n);
      for (std::size_t i = 0; i < n; ++i) v.set(i, (m >> i) & 1U);
      bool z_commutes = true, x_commutes = true;
      for (const auto& s : code.stabilizer.generators()) {
        z_commutes &= !s.x().dot(v);
        x_commutes &= !s.z().dot(v);
      }
      ASSERT_EQ(z_commutes, inc.multiply(v).none());
      ASSERT_EQ(x_commutes, fm.multiply(v).none());
    }
    ++checked;
  }
  EXPECT_GE(checked, 20U);
}

TEST(SurfaceCode, CentralizerHypothesisFailsOnBridge) {
  const CentralizerCheck c = z_only_centralizer_check(build_code(triangle_with_bridge()));
  EXPECT_EQ(c.status, CertificateStatus::kHypothesisFailed);
  EXPECT_EQ(c.reason, "coloop present");
}

TEST(SurfaceCode, ToricCertificate) {
  const SurfaceCode code = build_code(toric_grid(3, 3));
  for (std::size_t l = 0; l <= 2; ++l) {
    const Certificate c = lulc_certificate(code, l);
    EXPECT_EQ(c.status, CertificateStatus::kCertified) << c.to_string();
    EXPECT_EQ(c.theorem, "surfaceCode");
  }
}

TEST(SurfaceCode, DoubledEdgeFailsHypothesis) {
  const SurfaceCode code = build_code(double_edge(toric_grid(3, 3), 0, "d"));
  const Certificate c = lulc_certificate(code, 0);
  EXPECT_EQ(c.status, CertificateStatus::kHypothesisFailed);
  EXPECT_EQ(c.details, "girth=2 cogirth=3");
  EXPECT_THROW(minimal_decompositions(code, code.stabilizer), HypothesisError);
}

TEST(SurfaceCode, DecompositionsPartitionSupports) {
  const SurfaceCode code = build_code(toric_grid(3, 3));
  const StabilizerGroup s = build_state(code, 1);
  const auto decomps = minimal_decompositions(code, s);
  EXPECT_EQ(decomps.size(), 18U);
  for (const auto& d : decomps) {
    BitVector covered(code.num_qubits());
    for (const auto& p : d.parts) {
      EXPECT_TRUE((covered & p.support_mask()).none());
      covered = covered | p.support_mask();
      EXPECT_EQ(p.is_x_only(), d.op.is_x_only());
    }
    EXPECT_EQ(covered, d.op.support_mask());
    for (auto count : d.uniqueness_counts) EXPECT_EQ(count, 1U);
  }
}

// Every part produced by the peeling is a genuine minimal element of the
// state, checked against full enumeration.
TEST(SurfaceCode, FastPathAgreesWithEnumeration) {
  std::mt19937_64 rng(7);
  std::vector<EmbeddedGraph> graphs = {toric_grid(3, 3)};
  for (int i = 0; i < 200; ++i) graphs.push_back(reshuffled(complete_graph(4 + i % 2), rng));
  std::size_t certified = 0;
  for (const auto& g : graphs) {
    const GirthCogirth gc = girth_and_cogirth(g);
    const SurfaceCode code = build_code(g);
    if (gc.girth < 3 || gc.cogirth < 3) {
      EXPECT_EQ(lulc_certificate(code, 0).status, CertificateStatus::kHypothesisFailed);
      continue;
    }
    for (std::size_t l = 0; l <= code.num_logical(); l += std::max<std::size_t>(code.num_logical(), 1)) {
      const StabilizerGroup s = build_state(code, l);
      const MinimalElementReport brute = minimal_elements(s);
      const std::set<PauliOperator> truth(brute.elements.begin(), brute.elements.end());
      for (const auto& d : minimal_decompositions(code, s)) {
        for (const auto& p : d.parts) EXPECT_TRUE(truth.count(p)) << p.to_string();
      }
      const Certificate c = lulc_certificate(code, l);
      EXPECT_EQ(c.status, CertificateStatus::kCertified) << c.to_string();
      EXPECT_EQ(msc_certificate(s, &brute).status, CertificateStatus::kCertified);
      ++certified;
    }
  }
  EXPECT_GE(certified, 10U);
}

TEST(SurfaceCode, TransversalPreconditionOnToric) {
  const SurfaceCode code = build_code(toric_grid(3, 3));
  const BitVector star = code.site_operators[0].support_mask();
  const TransversalPrecondition p = transversal_precondition_report(code, star);
  EXPECT_EQ(p.dim_s_omega, 1U);
  EXPECT_EQ(p.b_omega, 2U);
  EXPECT_EQ(p.a_omega, 1U);
  EXPECT_TRUE(p.fixed);

  BitVector two(code.num_qubits());
  two.set(0);
  two.set(1);
  const TransversalPrecondition q = transversal_precondition_report(code, two);
  EXPECT_EQ(q.b_omega, 1U);
  EXPECT_FALSE(q.fixed);

  const TransversalReport r = full_transversal_report(code);
  EXPECT_TRUE(r.no_non_clifford_transversal);
  EXPECT_EQ(r.conclusion(), "no non-Clifford transversal gate");
  EXPECT_EQ(r.fixed_elements, 18U);
}

TEST(GridState, GeneratorsAndShortCycles) {
  const auto adj = grid_adjacency(2, 3);
  EXPECT_EQ(grid_cluster_state(2, 3).generators()[4].to_string(), "+IZIZXZ");
  EXPECT_FALSE(has_no_short_cycles(adj));
  EXPECT_TRUE(has_no_short_cycles(grid_adjacency(1, 5)));
  EXPECT_FALSE(has_no_short_cycles({{1, 2}, {0, 2}, {0, 1}}));
  EXPECT_TRUE(has_no_short_cycles({{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}}));
}

TEST(GridState, LocalMinimalityMatchesEnumeration) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    const auto adj = grid_adjacency(m, n);
    const StabilizerGroup s = graph_state(adj);
    const MinimalElementReport brute = minimal_elements(s);
    const std::set<PauliOperator> truth(brute.elements.begin(), brute.elements.end());
    for (std::size_t v = 0; v < m * n; ++v) {
      EXPECT_EQ(graph_state_generator_minimal(s, adj, v), truth.count(s.generators()[v]) == 1)
          << m << "x" << n << " v=" << v;
    }
  }
}

TEST(GridState, Certificates) {
  const Certificate small = grid_minimality_certificate(1, 2);
  EXPECT_EQ(small.status, CertificateStatus::kFailed);
  EXPECT_EQ(small.details, "bell_pair=1,2");
  EXPECT_EQ(grid_minimality_certificate(5, 5).to_string().rfind("CERTIFIED theorem=grid", 0), 0U);
  EXPECT_EQ(grid_minimality_certificate(5, 6).status, CertificateStatus::kCertified);
  EXPECT_EQ(grid_minimality_certificate(7, 7).status, CertificateStatus::kCertified);
}

// The local check agrees with the subgroup-dimension minimality test on every
// generator, and small grids fail exactly where some K_v is not minimal.
TEST(GridState, CertificateMatchesBruteMinimality) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = m; n <= 6; ++n) {
      const auto adj = grid_adjacency(m, n);
      const StabilizerGroup s = graph_state(adj);
      bool all_minimal = true;
      for (std::size_t v = 0; v < m * n; ++v) {
        const bool brute = is_minimal_element(s, s.generators()[v]);
        EXPECT_EQ(graph_state_generator_minimal(s, adj, v), brute) << m << "x" << n << " v=" << v;
        all_minimal &= brute;
      }
      const Certificate c = grid_minimality_certificate(m, n);
      EXPECT_EQ(c.certified(), all_minimal && is_bell_pair_free(s).free) << m << "x" << n << " " << c.to_string();
      if (m >= 5) {
        EXPECT_TRUE(c.certified()) << m << "x" << n;
      }
    }
  }
  EXPECT_FALSE(grid_minimality_certificate(3, 3).certified());
}

}  // namespace
}  // namespace stablulc
