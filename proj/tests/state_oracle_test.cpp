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

#include "stablulc/state_oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace stablulc;
using std::numbers::pi;

namespace {

QuadraticFormState edge_state() {
  return QuadraticFormState(2, BitMatrix::identity(2), {{0, 1}});
}
QuadraticFormState bell_form() { return QuadraticFormState(2, BitMatrix::from_strings({"11"})); }

QuadraticFormState random_form(std::mt19937_64& rng, std::size_t n) {
  const std::size_t dim = rng() % (n + 1);
  QuadraticFormState qf(n, stablulc::testing::random_subspace(rng, n, dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 2) qf.set_pair(i, j);
    }
  }
  return qf;
}

/// Exhaustive search over all 4^n diagonal Clifford layers.
bool brute_dlc(const QuadraticFormState& qf) {
  Mod4System sys(qf.num_qubits());
  for_each_in_span(qf.subspace(), [&](const BitVector& x) { sys.add_equation(x, qf.q(x) ? 2 : 0); });
  return stablulc::testing::brute_force_mod4(sys).has_value();
}

bool stabilizes(const PauliOperator& g, const DenseState& psi) {
  DenseState out = apply_pauli(g, psi);
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    if (std::abs(out.amplitudes[i] - psi.amplitudes[i]) > 1e-10) return false;
  }
  return true;
}

std::set<std::string> strings(const StabilizerGroup& s) {
  std::set<std::string> out;
  for (const auto& p : s.elements()) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(state_from_quadratic_form, examples) {
  DenseState b = state_from_quadratic_form(bell_form());
  const double r = 1 / std::sqrt(2.0);
  ASSERT_NEAR(b.amplitudes[0].real(), r, 1e-12);
  ASSERT_NEAR(b.amplitudes[3].real(), r, 1e-12);
  ASSERT_NEAR(std::abs(b.amplitudes[1]), 0, 1e-12);

  DenseState e = state_from_quadratic_form(edge_state());
  ASSERT_NEAR(e.amplitudes[0].real(), 0.5, 1e-12);
  ASSERT_NEAR(e.amplitudes[1].real(), 0.5, 1e-12);
  ASSERT_NEAR(e.amplitudes[2].real(), 0.5, 1e-12);
  ASSERT_NEAR(e.amplitudes[3].real(), -0.5, 1e-12);

  QuadraticFormState zero(3, BitMatrix(0, 3), {{0, 2}});
  DenseState z = state_from_quadratic_form(zero);
  ASSERT_NEAR(z.amplitudes[0].real(), 1.0, 1e-12);
  ASSERT_NEAR(z.norm(), 1.0, 1e-12);
  ASSERT_THROW(DenseState::zero(21), std::length_error);
}

TEST(state_from_stabilizer, examples) {
  DenseState z = state_from_stabilizer(StabilizerGroup::from_strings({"Z"}));
  ASSERT_NEAR(std::abs(z.amplitudes[0]), 1, 1e-12);
  DenseState b = state_from_stabilizer(StabilizerGroup::from_strings({"XX", "ZZ"}));
  ASSERT_TRUE(equal_up_to_global_phase(b, state_from_quadratic_form(bell_form())));
  DenseState g = state_from_stabilizer(StabilizerGroup::from_strings({"XXX", "ZZI", "IZZ"}));
  ASSERT_NEAR(std::abs(g.amplitudes[0]), 1 / std::sqrt(2.0), 1e-12);
  ASSERT_NEAR(std::abs(g.amplitudes[7]), 1 / std::sqrt(2.0), 1e-12);
  DenseState m = state_from_stabilizer(StabilizerGroup::from_strings({"-Z"}));
  ASSERT_NEAR(std::abs(m.amplitudes[1]), 1, 1e-12);
  ASSERT_THROW(state_from_stabilizer(StabilizerGroup::from_strings({"ZZ"})), std::invalid_argument);
}

TEST(stabilizer_from_quadratic_form, examples) {
  ASSERT_EQ(strings(stabilizer_from_quadratic_form(bell_form())),
            strings(StabilizerGroup::from_strings({"XX", "ZZ"})));
  ASSERT_EQ(strings(stabilizer_from_quadratic_form(QuadraticFormState(1, BitMatrix::identity(1)))),
            strings(StabilizerGroup::from_strings({"X"})));
  ASSERT_EQ(strings(stabilizer_from_quadratic_form(edge_state())),
            strings(StabilizerGroup::from_strings({"XZ", "ZX"})));
}

TEST(stabilizer_from_quadratic_form, round_trip_random) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    QuadraticFormState qf = random_form(rng, n);
    DenseState direct = state_from_quadratic_form(qf);
    StabilizerGroup s = stabilizer_from_quadratic_form(qf);
    ASSERT_TRUE(equal_up_to_global_phase(state_from_stabilizer(s), direct));
    for (const auto& g : s.generators()) ASSERT_TRUE(stabilizes(g, direct)) << g.to_string();
  }
}

TEST(apply_dlu, examples) {
  DenseState e = state_from_quadratic_form(edge_state());
  ASSERT_TRUE(equal_up_to_global_phase(apply_dlu(DiagonalLocalUnitary::identity(2), e), e));

  DenseState plus = state_from_quadratic_form(QuadraticFormState(1, BitMatrix::identity(1)));
  DenseState minus = apply_dlu({{pi}}, plus);
  ASSERT_NEAR(minus.amplitudes[1].real(), -1 / std::sqrt(2.0), 1e-12);

  DenseState t = apply_dlu({{pi / 4, pi / 4}}, e);
  const Amplitude w = std::polar(1.0, pi / 4);
  ASSERT_NEAR(std::abs(t.amplitudes[0] - 0.5), 0, 1e-12);
  ASSERT_NEAR(std::abs(t.amplitudes[1] - 0.5 * w), 0, 1e-12);
  ASSERT_NEAR(std::abs(t.amplitudes[2] - 0.5 * w), 0, 1e-12);
  ASSERT_NEAR(std::abs(t.amplitudes[3] + 0.5 * Amplitude(0, 1)), 0, 1e-12);
  ASSERT_NEAR(t.norm(), 1.0, 1e-12);
}

TEST(equal_up_to_global_phase, examples) {
  DenseState e = state_from_quadratic_form(edge_state());
  ASSERT_TRUE(equal_up_to_global_phase(e, e));
  DenseState neg = e;
  for (auto& a : neg.amplitudes) a = -a;
  ASSERT_TRUE(equal_up_to_global_phase(neg, e));
  ASSERT_FALSE(equal_up_to_global_phase(state_from_quadratic_form(bell_form()), e));
}

TEST(dlc_feasible, examples) {
  auto zero = dlc_feasible(QuadraticFormState(3, BitMatrix::identity(3)));
  ASSERT_TRUE(zero);
  ASSERT_EQ(*zero, (std::vector<std::uint8_t>{0, 0, 0}));
  ASSERT_FALSE(dlc_feasible(edge_state()));
  QuadraticFormState bell_q(2, BitMatrix::from_strings({"11"}), {{0, 1}});
  auto a = dlc_feasible(bell_q);
  ASSERT_TRUE(a);
  ASSERT_EQ(((*a)[0] + (*a)[1]) % 4, 2);
}

TEST(dlc_feasible, agrees_with_exhaustive_and_oracle) {
  std::mt19937_64 rng(53);
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    QuadraticFormState qf = random_form(rng, n);
    auto a = dlc_feasible(qf);
    ASSERT_EQ(a.has_value(), brute_dlc(qf));
    if (!a) {
      ++infeasible;
      continue;
    }
    ASSERT_TRUE(verify_dlu_pair(qf.with_zero_form(), qf, DiagonalLocalUnitary::from_z4(*a)));
  }
  ASSERT_GT(infeasible, 0);
}

TEST(verify_dlu_pair, examples) {
  QuadraticFormState s(3, BitMatrix::from_strings({"111"}));
  QuadraticFormState q(3, BitMatrix::from_strings({"111"}), {{0, 1}});
  ASSERT_TRUE(verify_dlu_pair(s, s, DiagonalLocalUnitary::identity(3)));
  ASSERT_TRUE(verify_dlu_pair(s, q, {{pi / 4, pi / 4, pi / 2}}));
  ASSERT_FALSE(verify_dlu_pair(s, q, {{pi / 4, pi / 4 + 0.01, pi / 2}}));
  ASSERT_THROW(verify_dlu_pair(s, edge_state(), DiagonalLocalUnitary::identity(2)), std::invalid_argument);
}

TEST(verify_dlu_pair, edge_state_has_no_diagonal_partner) {
  // Amplitude ratios at 00, 01, 10 pin every angle to zero, leaving 11 wrong.
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      ASSERT_FALSE(verify_dlu_pair(edge_state().with_zero_form(), edge_state(), {{a * pi / 4, b * pi / 4}}));
    }
  }
}

TEST(relative_pair, preserves_dlu_relation) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    QuadraticFormState a = random_form(rng, n);
    QuadraticFormState b = a;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rng() % 2) b.toggle_pair(i, i + 1);
    }
    auto [zero, sum] = relative_pair(a, b);
    ASSERT_TRUE(zero.is_zero_form());
    DiagonalLocalUnitary u;
    for (std::size_t j = 0; j < n; ++j) u.thetas.push_back((rng() % 4) * pi / 2);
    ASSERT_EQ(verify_dlu_pair(a, b, u), verify_dlu_pair(zero, sum, u));
  }
}
