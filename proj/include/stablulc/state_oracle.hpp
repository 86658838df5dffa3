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

#ifndef STABLULC_STATE_ORACLE_HPP_
#define STABLULC_STATE_ORACLE_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablulc/gf2.hpp"
#include "stablulc/limits.hpp"
#include "stablulc/pauli.hpp"

namespace stablulc {

inline constexpr std::size_t kMaxDenseQubits = 20;
inline constexpr double kPhaseTolerance = 1e-8;

using Amplitude = std::complex<double>;

/// Dense state vector. Qubit i is bit i of the basis index.
struct DenseState {
  std::size_t n = 0;
  std::vector<Amplitude> amplitudes;

  static DenseState zero(std::size_t n) {
    if (n > kMaxDenseQubits) {
      throw std::length_error("dense state on " + std::to_string(n) + " qubits exceeds limit " +
                              std::to_string(kMaxDenseQubits));
    }
    return DenseState{n, std::vector<Amplitude>(std::size_t{1} << n)};
  }

  double norm() const {
    double s = 0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }

  void normalize() {
    const double nrm = norm();
    if (nrm == 0) throw std::logic_error("cannot normalize the zero vector");
    for (auto& a : amplitudes) a /= nrm;
  }
};

inline std::size_t basis_index(const BitVector& x) {
  return x.size() == 0 ? 0 : static_cast<std::size_t>(x.words()[0]);
}

inline BitVector basis_vector(std::size_t n, std::size_t index) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1U) v.set(i);
  }
  return v;
}

/// Pair (S, q) with q(x) = sum_{i<j} q_ij x_i x_j, for the state
/// sum_{x in S} (-1)^{q(x)} |x>.
class QuadraticFormState {
 public:
  QuadraticFormState() = default;
  QuadraticFormState(std::size_t n, BitMatrix subspace,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs = {})
      : n_(n), subspace_(std::move(subspace)), coeffs_(n, n) {
    if (subspace_.rows() == 0) subspace_ = BitMatrix(0, n);
    if (subspace_.cols() != n) throw std::invalid_argument("subspace basis has wrong length");
    if (rank(subspace_) != subspace_.rows()) throw std::invalid_argument("subspace basis rows are dependent");
    for (auto [i, j] : pairs) set_pair(i, j);
  }

  std::size_t num_qubits() const { return n_; }
  const BitMatrix& subspace() const { return subspace_; }
  std::size_t dimension() const { return subspace_.rows(); }

  /// Toggles q_ij (0-based, i != j).
  void toggle_pair(std::size_t i, std::size_t j) {
    if (i == j || i >= n_ || j >= n_) throw std::invalid_argument("invalid quadratic term");
    if (i > j) std::swap(i, j);
    coeffs_.row(i).flip(j);
  }
  void set_pair(std::size_t i, std::size_t j, bool value = true) {
    if (i == j || i >= n_ || j >= n_) throw std::invalid_argument("invalid quadratic term");
    if (i > j) std::swap(i, j);
    coeffs_.set(i, j, value);
  }
  bool coeff(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i != j && coeffs_.get(i, j);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j : coeffs_.row(i).indices()) out.emplace_back(i, j);
    }
    return out;
  }
  bool is_zero_form() const { return coeffs_.is_zero(); }

  bool q(const BitVector& x) const {
    bool acc = false;
    for (std::size_t i : x.indices()) acc ^= coeffs_.row(i).dot(x);
    return acc;
  }

  /// Coefficient vector of the bilinear form B(s, .) = q(s + .) + q(s) + q(.).
  BitVector polar(const BitVector& s) const {
    BitVector w(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      bool bit = false;
      for (std::size_t j : s.indices()) bit ^= coeff(i, j);
      if (bit) w.set(i);
    }
    return w;
  }

  QuadraticFormState with_zero_form() const { return QuadraticFormState(n_, subspace_); }

  friend bool operator==(const QuadraticFormState& a, const QuadraticFormState& b) {
    return a.n_ == b.n_ && same_row_space(a.subspace_, b.subspace_) && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t n_ = 0;
  BitMatrix subspace_;
  BitMatrix coeffs_;  // strictly upper triangular
};

/// U = tensor of diag(1, e^{i theta_j}).
struct DiagonalLocalUnitary {
  std::vector<double> thetas;

  static DiagonalLocalUnitary identity(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
  /// Diagonal Clifford diag(1, i^{a_j}).
  static DiagonalLocalUnitary from_z4(const std::vector<std::uint8_t>& a) {
    DiagonalLocalUnitary u;
    for (auto v : a) u.thetas.push_back(v * std::numbers::pi / 2);
    return u;
  }
};

inline DenseState state_from_quadratic_form(const QuadraticFormState& qf) {
  DenseState psi = DenseState::zero(qf.num_qubits());
  const double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(qf.dimension())));
  for_each_in_span(qf.subspace(), [&](const BitVector& x) {
    psi.amplitudes[basis_index(x)] = qf.q(x) ? -amp : amp;
  });
  return psi;
}

/// g|b> = sign * i^{|x&z|} * (-1)^{z.b} |b xor x>.
inline DenseState apply_pauli(const PauliOperator& g, const DenseState& psi) {
  if (g.num_qubits() != psi.n) throw std::invalid_argument("Pauli/state size mismatch");
  DenseState out = DenseState::zero(psi.n);
  const std::size_t xmask = basis_index(g.x());
  const std::size_t zmask = basis_index(g.z());
  static const Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Amplitude base = kIPow[g.x().overlap(g.z()) % 4];
  if (g.negative()) base = -base;
  for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
    const Amplitude a = psi.amplitudes[b];
    if (a == Amplitude{}) continue;
    const bool odd = std::popcount(zmask & b) & 1;
    out.amplitudes[b ^ xmask] += odd ? -base * a : base * a;
  }
  return out;
}

/// The unique +1 eigenstate of a full-rank stabilizer group.
inline DenseState state_from_stabilizer(const StabilizerGroup& s) {
  if (!s.is_state()) throw std::invalid_argument("stabilizer group does not fix a unique state");
  const std::size_t n = s.num_qubits();
  DenseState psi = DenseState::zero(n);
  // The Z-only subgroup pins the support coset: z.b = sign bit for each element.
  CssSplit split = is_css(s);
  BitMatrix zrows(0, n);
  BitVector rhs(split.z_generators.size());
  for (std::size_t i = 0; i < split.z_generators.size(); ++i) {
    zrows.append_row(split.z_generators[i].z());
    if (split.z_generators[i].negative()) rhs.set(i);
  }
  auto b = solve_linear(zrows, rhs);
  if (!b) throw std::logic_error("inconsistent Z-only constraints in a valid stabilizer group");
  psi.amplitudes[basis_index(*b)] = 1.0;
  for (const auto& g : s.generators()) {
    DenseState gpsi = apply_pauli(g, psi);
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
      psi.amplitudes[i] = 0.5 * (psi.amplitudes[i] + gpsi.amplitudes[i]);
    }
  }
  if (psi.norm() < 1e-12) throw std::logic_error("stabilizer projection vanished");
  psi.normalize();
  return psi;
}

/// Generators: Z^z for z in S-perp, and +-X^s Z^{B(s,.)} for each basis row s.
inline StabilizerGroup stabilizer_from_quadratic_form(const QuadraticFormState& qf) {
  const std::size_t n = qf.num_qubits();
  std::vector<PauliOperator> gens;
  for (const auto& s : qf.subspace().row_vectors()) {
    // i^{|s&w|} X^s Z^w maps the state to (-1)^{q(s) + |s&w|/2} times itself.
    BitVector w = qf.polar(s);
    const bool negative = ((s.overlap(w) / 2) & 1U) ^ qf.q(s);
    gens.emplace_back(s, std::move(w), negative);
  }
  BitMatrix perp = nullspace(qf.subspace().rows() == 0 ? BitMatrix(0, n) : qf.subspace());
  for (const auto& z : perp.row_vectors()) gens.push_back(PauliOperator::z_type(z));
  return StabilizerGroup(n, std::move(gens));
}

inline DenseState apply_dlu(const DiagonalLocalUnitary& u, const DenseState& psi) {
  if (u.thetas.size() != psi.n) throw std::invalid_argument("DLU length does not match state");
  DenseState out = psi;
  for (std::size_t b = 0; b < out.amplitudes.size(); ++b) {
    if (out.amplitudes[b] == Amplitude{}) continue;
    double phase = 0;
    for (std::size_t j = 0; j < psi.n; ++j) {
      if ((b >> j) & 1U) phase += u.thetas[j];
    }
    out.amplitudes[b] *= std::polar(1.0, phase);
  }
  return out;
}

inline bool equal_up_to_global_phase(const DenseState& a, const DenseState& b,
                                     double tol = kPhaseTolerance) {
  if (a.n != b.n) throw std::invalid_argument("states have different qubit counts");
  std::size_t k = 0;
  for (std::size_t i = 1; i < b.amplitudes.size(); ++i) {
    if (std::abs(b.amplitudes[i]) > std::abs(b.amplitudes[k])) k = i;
  }
  if (std::abs(b.amplitudes[k]) < tol) return a.norm() < tol;
  Amplitude phase = a.amplitudes[k] / b.amplitudes[k];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  phase /= std::abs(phase);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i] - phase * b.amplitudes[i]) > tol) return false;
  }
  return true;
}

/// Some a in Z4^n with sum_j a_j x_j = 2 q(x) (mod 4) for all x in S, or
/// nullopt when no diagonal Clifford maps (S, 0) to (S, q).
inline std::optional<std::vector<std::uint8_t>> dlc_feasible(const QuadraticFormState& qf,
                                                             std::uint64_t cap = enumeration_cap()) {
  require_enumerable(qf.dimension(), "dlc_feasible subspace enumeration", cap);
  Mod4System sys(qf.num_qubits());
  for_each_in_span(qf.subspace(), [&](const BitVector& x) {
    if (x.any()) sys.add_equation(x, qf.q(x) ? 2U : 0U);
  });
  return solve_mod4(sys);
}

/// True iff U applied to the state of `psi` equals the state of `psi_prime`
/// up to global phase.
inline bool verify_dlu_pair(const QuadraticFormState& psi, const QuadraticFormState& psi_prime,
                            const DiagonalLocalUnitary& u) {
  if (psi.num_qubits() != psi_prime.num_qubits() ||
      !same_row_space(psi.subspace(), psi_prime.subspace())) {
    throw std::invalid_argument("verify_dlu_pair: subspaces differ");
  }
  return equal_up_to_global_phase(apply_dlu(u, state_from_quadratic_form(psi)),
                                  state_from_quadratic_form(psi_prime));
}

/// Maps a pair (q, q') on one subspace to (0, q + q'); a diagonal unitary
/// relates the first pair iff it relates the second.
inline std::pair<QuadraticFormState, QuadraticFormState> relative_pair(const QuadraticFormState& a,
                                                                       const QuadraticFormState& b) {
  if (a.num_qubits() != b.num_qubits() || !same_row_space(a.subspace(), b.subspace())) {
    throw std::invalid_argument("relative_pair: subspaces differ");
  }
  QuadraticFormState sum = b;
  for (auto [i, j] : a.pairs()) sum.toggle_pair(i, j);
  return {a.with_zero_form(), sum};
}

}  // namespace stablulc

#endif  // STABLULC_STATE_ORACLE_HPP_
