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

#ifndef STABLULC_FACTORY_HPP_
#define STABLULC_FACTORY_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "stablulc/gf2.hpp"
#include "stablulc/limits.hpp"
#include "stablulc/state_oracle.hpp"

namespace stablulc {

inline constexpr double kAngleTolerance = 1e-9;

/// Reduces an angle to [0, 2 pi), snapping values within tolerance of 2 pi to 0.
inline double normalize_angle(double a) {
  constexpr double two_pi = 2 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  if (two_pi - a < kAngleTolerance) a = 0;
  return a;
}

inline bool angles_equal(double a, double b) {
  const double d = normalize_angle(a - b);
  return d < kAngleTolerance || 2 * std::numbers::pi - d < kAngleTolerance;
}

/// CSS code with one logical qubit from classical codes C in D:
/// |b> = sum_{c in C} |c + b X_e>.
struct CssCode {
  std::string name;
  std::size_t m = 0;
  BitMatrix c;  // X-stabilizer supports
  BitMatrix d;  // C plus X_e
  BitVector xe;
  BitVector ze;

  std::size_t num_logical() const { return rank(d) - rank(c); }
};

/// Throws unless C in D, X_e in D \ C, Z_e orthogonal to C and X_e . Z_e = 1.
inline void validate(const CssCode& code) {
  const std::size_t m = code.m;
  if (code.c.cols() != m || code.d.cols() != m || code.xe.size() != m || code.ze.size() != m) {
    throw std::invalid_argument("CSS code '" + code.name + "' has inconsistent lengths");
  }
  for (const auto& r : code.c.row_vectors()) {
    if (!in_row_space(code.d, r)) throw std::invalid_argument("CSS code '" + code.name + "': C is not inside D");
    if (r.dot(code.ze)) throw std::invalid_argument("CSS code '" + code.name + "': Z_e is not orthogonal to C");
  }
  if (!in_row_space(code.d, code.xe) || (code.c.rows() > 0 && in_row_space(code.c, code.xe))) {
    throw std::invalid_argument("CSS code '" + code.name + "': X_e is not in D \\ C");
  }
  if (!code.xe.dot(code.ze)) throw std::invalid_argument("CSS code '" + code.name + "': X_e . Z_e != 1");
  if (code.num_logical() != 1) throw std::invalid_argument("CSS code '" + code.name + "' must encode one qubit");
}

struct CssParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t d_x = 0;  // lightest X logical, over D \ C
  std::size_t d_z = 0;  // lightest Z logical, over C^perp \ D^perp
};

namespace detail {

/// Minimum weight over span(space) \ span(sub). Spans of dimension up to
/// 20 are enumerated; larger ones are searched by increasing weight.
inline std::size_t min_weight_outside(const BitMatrix& space, const BitMatrix& sub, std::size_t m) {
  const BitMatrix basis = row_basis(space);
  RowSpace inner(m);
  for (const auto& r : sub.row_vectors()) inner.insert(r);
  std::size_t best = m + 1;
  if (basis.rows() <= 20) {
    for_each_in_span(basis, [&](const BitVector& v) {
      if (v.popcount() < best && !inner.contains(v)) best = v.popcount();
    });
    return best;
  }
  const BitMatrix checks = nullspace(basis);
  const std::uint64_t cap = enumeration_cap();
  std::uint64_t visited = 0;
  for (std::size_t w = 1; w <= m; ++w) {
    std::vector<std::size_t> pick(w);
    for (std::size_t i = 0; i < w; ++i) pick[i] = i;
    while (true) {
      if (++visited > cap) throw CapExceeded("low-weight distance search", visited, cap);
      const BitVector v = BitVector::from_indices(m, pick);
      if (checks.multiply(v).none() && !inner.contains(v)) return w;
      std::size_t i = w;
      while (i > 0 && pick[i - 1] == m - w + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < w; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return best;
}

}  // namespace detail

inline CssParameters css_parameters(const CssCode& code) {
  CssParameters p;
  p.n = code.m;
  p.k = code.num_logical();
  p.d_x = detail::min_weight_outside(code.d, code.c, code.m);
  const BitMatrix c_perp = nullspace(code.c.rows() == 0 ? BitMatrix(0, code.m) : code.c);
  const BitMatrix d_perp = nullspace(code.d);
  p.d_z = detail::min_weight_outside(c_perp, d_perp, code.m);
  p.d = std::min(p.d_x, p.d_z);
  return p;
}

/// Quantum Reed-Muller code on 2^r - 1 qubits: columns are the nonzero
/// vectors of F2^r, C has one row per coordinate and D adds the all-ones row.
inline CssCode quantum_reed_muller(std::size_t r) {
  CssCode code;
  code.m = (std::size_t{1} << r) - 1;
  code.name = "rm" + std::to_string(code.m);
  code.c = BitMatrix(r, code.m);
  for (std::size_t col = 0; col < code.m; ++col) {
    for (std::size_t bit = 0; bit < r; ++bit) code.c.set(bit, col, ((col + 1) >> bit) & 1U);
  }
  code.xe = BitVector(code.m);
  for (std::size_t i = 0; i < code.m; ++i) code.xe.set(i);
  code.d = code.c;
  code.d.append_row(code.xe);
  code.ze = BitVector::from_indices(code.m, {0, 1, 2});
  validate(code);
  return code;
}

inline CssCode rm15() { return quantum_reed_muller(4); }
inline CssCode rm31() { return quantum_reed_muller(5); }

/// Two-qubit repetition code <ZZ> with X_e = 11 and Z_e = 10.
inline CssCode rep2() {
  CssCode code;
  code.name = "rep2";
  code.m = 2;
  code.c = BitMatrix(0, 2);
  code.d = BitMatrix::from_strings({"11"});
  code.xe = BitVector::from_string("11");
  code.ze = BitVector::from_string("10");
  validate(code);
  return code;
}

/// Logical phase phi in [0, 2 pi) when diag(1, e^{i theta}) on every qubit
/// acts as diag(1, e^{i phi}) on the code, or nullopt when the codespace is
/// not preserved with a diagonal action.
inline std::optional<double> transversal_diag_action(const CssCode& code, double theta) {
  require_enumerable(code.c.rows(), "transversal codeword enumeration");
  std::optional<std::complex<double>> alpha, beta;
  bool preserved = true;
  auto check = [&](std::optional<std::complex<double>>& slot, std::size_t weight) {
    const std::complex<double> p = std::polar(1.0, theta * static_cast<double>(weight));
    if (!slot) {
      slot = p;
    } else if (std::abs(*slot - p) > kAngleTolerance) {
      preserved = false;
    }
  };
  const BitMatrix c_rows = code.c.rows() == 0 ? BitMatrix(0, code.m) : code.c;
  for_each_in_span(c_rows, [&](const BitVector& c) {
    check(alpha, c.popcount());
    check(beta, (c ^ code.xe).popcount());
  });
  if (!preserved) return std::nullopt;
  return normalize_angle(std::arg(*beta / *alpha));
}

/// Smallest physical angle in [0, 2 pi) whose transversal application gives
/// logical phase phi.
inline std::optional<double> find_transversal_angle(const CssCode& code, double phi) {
  const std::size_t w = code.xe.popcount();
  std::optional<double> best;
  for (std::size_t k = 0; k < w; ++k) {
    const double theta = (normalize_angle(phi) + 2 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(w);
    auto got = transversal_diag_action(code, theta);
    if (got && angles_equal(*got, phi) && (!best || theta < *best)) best = theta;
  }
  return best;
}

/// A pair (S, 0), (S, q) together with a diagonal local unitary claimed to
/// map the first state to the second.
struct CounterexampleSeed {
  QuadraticFormState form;
  DiagonalLocalUnitary dlu;
  std::string provenance;

  std::size_t num_qubits() const { return form.num_qubits(); }
};

inline bool dlu_verified(const CounterexampleSeed& seed) {
  return verify_dlu_pair(seed.form.with_zero_form(), seed.form, seed.dlu);
}

/// Fits q with q(x) = [phase(x) == pi] on S. Throws when the phases are not
/// all 0 or pi, or when no pure quadratic form matches.
inline QuadraticFormState fit_quadratic_form(const BitMatrix& subspace, const std::vector<double>& thetas) {
  const std::size_t n = thetas.size();
  const BitMatrix basis = subspace.rows() == 0 ? BitMatrix(0, n) : row_basis(subspace);
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) monomials.emplace_back(i, j);
  }
  const std::size_t vars = monomials.size();
  require_enumerable(basis.rows(), "quadratic form fitting");
  BitMatrix system(0, vars + 1);
  RowSpace reduced(vars + 1);
  bool bad_phase = false;
  for_each_in_span(basis, [&](const BitVector& x) {
    double phase = 0;
    for (std::size_t i : x.indices()) phase += thetas[i];
    const bool pi = angles_equal(phase, std::numbers::pi);
    if (!pi && !angles_equal(phase, 0)) bad_phase = true;
    BitVector row(vars + 1);
    for (std::size_t v = 0; v < vars; ++v) row.set(v, x.get(monomials[v].first) && x.get(monomials[v].second));
    row.set(vars, pi);
    if (reduced.insert(row)) system.append_row(row);
  });
  if (bad_phase) throw std::invalid_argument("DLU phase on S is not 0 or pi everywhere");
  BitMatrix a(0, vars);
  BitVector b(system.rows());
  for (std::size_t r = 0; r < system.rows(); ++r) {
    a.append_row(system.row(r).slice(0, vars));
    b.set(r, system.row(r).get(vars));
  }
  auto sol = vars == 0 ? (b.any() ? std::nullopt : std::optional<BitVector>(BitVector(0))) : solve_linear(a, b);
  if (!sol) throw std::invalid_argument("DLU phase on S is not a pure quadratic form");
  QuadraticFormState qf(n, basis);
  for (std::size_t v : sol->indices()) qf.set_pair(monomials[v].first, monomials[v].second);
  return qf;
}

inline CounterexampleSeed seed_from_dlu(const BitMatrix& subspace, const DiagonalLocalUnitary& dlu,
                                        std::string provenance = "fitted from DLU") {
  return CounterexampleSeed{fit_quadratic_form(subspace, dlu.thetas), dlu, std::move(provenance)};
}

/// Encodes qubit j of the seed into `code`. The result has qubits
/// (old qubits without j, then the m code qubits).
inline CounterexampleSeed encode_pair(const CounterexampleSeed& seed, std::size_t j, const CssCode& code) {
  const std::size_t n = seed.num_qubits();
  if (j >= n) throw std::invalid_argument("encode_pair: qubit " + std::to_string(j + 1) + " out of range");
  if (seed.dlu.thetas.size() != n) throw std::invalid_argument("encode_pair: DLU length mismatch");
  const auto theta = find_transversal_angle(code, seed.dlu.thetas[j]);
  if (!theta) {
    throw std::invalid_argument("encode_pair: code " + code.name + " has no transversal angle for qubit " +
                                std::to_string(j + 1));
  }
  const BitMatrix basis = row_basis(seed.form.subspace());
  std::optional<BitVector> e;
  for (const auto& r : basis.row_vectors()) {
    if (r.get(j)) {
      e = r;
      break;
    }
  }
  if (!e) throw std::invalid_argument("encode_pair: qubit " + std::to_string(j + 1) + " is constant over S");

  const std::size_t m = code.m, nn = n - 1 + m;
  const BitVector zero_block(m);
  BitMatrix sbar(0, nn);
  for (const auto& r : basis.row_vectors()) {
    if (r == *e) continue;
    sbar.append_row((r.get(j) ? r ^ *e : r).without(j).concat(zero_block));
  }
  for (const auto& c : code.c.row_vectors()) sbar.append_row(BitVector(n - 1).concat(c));
  sbar.append_row(e->without(j).concat(code.xe));

  auto old_index = [j](std::size_t i) { return i < j ? i : i - 1; };
  QuadraticFormState qbar(nn, sbar);
  for (auto [a, b] : seed.form.pairs()) {
    if (a != j && b != j) {
      qbar.set_pair(old_index(a), old_index(b));
      continue;
    }
    const std::size_t other = old_index(a == j ? b : a);
    for (std::size_t k : code.ze.indices()) qbar.toggle_pair(other, n - 1 + k);
  }

  DiagonalLocalUnitary u;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j) u.thetas.push_back(seed.dlu.thetas[i]);
  }
  for (std::size_t k = 0; k < m; ++k) u.thetas.push_back(*theta);
  return CounterexampleSeed{std::move(qbar), std::move(u),
                            seed.provenance + " | encode q" + std::to_string(j + 1) + " " + code.name};
}

/// Folds a DLC solution of encode_pair(seed, j, code) back to the seed:
/// a_j = sum_k X_e[k] a'_{n-1+k} (mod 4).
inline std::vector<std::uint8_t> pull_back_dlc(const std::vector<std::uint8_t>& encoded, std::size_t n, std::size_t j,
                                               const CssCode& code) {
  if (encoded.size() != n - 1 + code.m) throw std::invalid_argument("pull_back_dlc: assignment length mismatch");
  std::vector<std::uint8_t> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j) a[i] = encoded[i < j ? i : i - 1];
  }
  unsigned acc = 0;
  for (std::size_t k : code.xe.indices()) acc += encoded[n - 1 + k];
  a[j] = static_cast<std::uint8_t>(acc & 3U);
  return a;
}

struct LengthPlan {
  std::size_t i = 0;  // rm15 uses
  std::size_t j = 0;  // rm31 uses
  std::size_t t = 0;  // rep2 uses
  std::size_t n = 27;

  bool distance_three() const { return t == 0; }
  std::string to_string() const {
    return "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",t=" + std::to_string(t) + ")";
  }
  friend bool operator==(const LengthPlan&, const LengthPlan&) = default;
};

inline constexpr std::size_t kBaseLength = 27;

/// Plan with 27 + 14 i + 30 j + t = n. Plans with t = 0 are preferred; among
/// the allowed plans the total i + j + t is minimised, then t, then j.
inline std::optional<LengthPlan> length_plan(std::size_t n, bool distance3_only = false) {
  if (n < kBaseLength) return std::nullopt;
  const std::size_t rest = n - kBaseLength;
  auto best_with = [&](bool allow_t) -> std::optional<LengthPlan> {
    std::optional<LengthPlan> best;
    for (std::size_t j = 0; 30 * j <= rest; ++j) {
      for (std::size_t i = 0; 14 * i + 30 * j <= rest; ++i) {
        const std::size_t t = rest - 14 * i - 30 * j;
        if (t > 0 && !allow_t) continue;
        LengthPlan p{i, j, t, n};
        auto key = [](const LengthPlan& q) { return std::tuple(q.i + q.j + q.t, q.t, q.j); };
        if (!best || key(p) < key(*best)) best = p;
      }
    }
    return best;
  };
  if (auto p = best_with(false)) return p;
  if (distance3_only) return std::nullopt;
  return best_with(true);
}

inline std::vector<LengthPlan> enumerate_lengths(std::size_t max_n, bool distance3_only = false) {
  std::vector<LengthPlan> out;
  for (std::size_t n = kBaseLength; n <= max_n; ++n) {
    if (auto p = length_plan(n, distance3_only)) out.push_back(*p);
  }
  return out;
}

}  // namespace stablulc

#endif  // STABLULC_FACTORY_HPP_
