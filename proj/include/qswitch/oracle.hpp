// Copyright 2026 The qswitch Authors
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

#pragma once

// Independent verification engines. Nothing in this file uses the composition
// coefficients from trajectory.hpp: the exact oracle pushes density matrices
// through explicit Kraus sums, and the sampler draws Kraus pairs directly.
//
// The receiver never physically applies a correcting Pauli after decoding.
// Conditioning the Bell-outcome statistics on the control outcome already
// gives the capacity that correction would achieve.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qswitch/bell.hpp"

namespace qswitch {

/// rows[x][y] = P(receiver decodes y | sender encoded x).
using TransitionMatrix = std::array<Probabilities4, 4>;
/// joint[x][y] = P(X = x, Y = y).
using JointDistribution = std::array<Probabilities4, 4>;

struct SwitchOracleResult {
  double p_plus = 1.0;
  TransitionDistribution transition_plus;
  TransitionDistribution transition_minus;  // (1,0,0,0) when the branch is empty
  double capacity = 0.0;
};

namespace detail {

inline constexpr double kEmptyBranch = 1e-14;
inline constexpr double kSymmetryTolerance = 1e-12;

inline double sum_plogp(const Probabilities4& row) {
  double s = 0.0;
  for (double t : row) s += t > 0.0 ? t * std::log2(t) : 0.0;
  return s;
}

inline CMatrix encoded_epr(std::size_t symbol) {
  const CMatrix u = kron(superdense_encoder(symbol), CMatrix::identity(2));
  return conjugate(u, bell_projector(0));
}

// Receiver's view relative to the sent symbol: every input must produce the
// same error-label distribution, rows[x][y] = row[x XOR y].
inline TransitionDistribution symmetric_row(const TransitionMatrix& rows) {
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      if (std::abs(rows[x][y] - rows[0][x ^ y]) > kSymmetryTolerance) {
        throw std::logic_error("oracle: transition rows are not input-symmetric");
      }
  return TransitionDistribution(rows[0]);
}

// Lifts an operator on (A, control) to (A, B, control) with identity on B.
inline CMatrix lift_skip_middle(const CMatrix& w_ac) {
  CMatrix full(8);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t c2 = 0; c2 < 2; ++c2) {
          const Complex v = w_ac(a * 2 + c, a2 * 2 + c2);
          if (v == Complex{}) continue;
          for (std::size_t b = 0; b < 2; ++b) full(a * 4 + b * 2 + c, a2 * 4 + b * 2 + c2) = v;
        }
  return full;
}

// Projects the control (least significant qubit) onto |+> or |->, returning
// the unnormalized (A, B) block.
inline CMatrix project_control(const CMatrix& rho_abc, bool plus) {
  const double sign = plus ? 1.0 : -1.0;
  CMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Complex v = 0.0;
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
          const double sx = x == 0 ? 1.0 : sign;
          const double sy = y == 0 ? 1.0 : sign;
          v += sx * sy * rho_abc(r * 2 + x, c * 2 + y);
        }
      out(r, c) = 0.5 * v;
    }
  return out;
}

}  // namespace detail

/// The 16 switch Kraus operators on (A, control), A most significant:
///   W_ij = sqrt(p_i q_j) (E_j D_i ⊗ |0><0| + D_i E_j ⊗ |1><1|),
/// index 4*i + j.
inline std::vector<CMatrix> switch_kraus_operators(const PauliChannel& d, const PauliChannel& e) {
  const CMatrix p0 = CMatrix(2, {1.0, 0.0, 0.0, 0.0});
  const CMatrix p1 = CMatrix(2, {0.0, 0.0, 0.0, 1.0});
  std::vector<CMatrix> ops;
  ops.reserve(16);
  for (Pauli i : kAllPaulis)
    for (Pauli j : kAllPaulis) {
      const CMatrix di = pauli_matrix(i), ej = pauli_matrix(j);
      const double amp = std::sqrt(d.prob(i) * e.prob(j));
      ops.push_back(Complex(amp) * (kron(ej * di, p0) + kron(di * ej, p1)));
    }
  return ops;
}

/// Superdense coding through D then E, one transition row per sent symbol.
inline TransitionMatrix oracle_classical_rows(const PauliChannel& d, const PauliChannel& e) {
  TransitionMatrix rows{};
  for (std::size_t x = 0; x < 4; ++x) {
    const DensityMatrix sent(detail::encoded_epr(x));
    const DensityMatrix received = channel_apply(e, channel_apply(d, sent, 0), 0);
    rows[x] = bell_measure(received).probs();
  }
  return rows;
}

inline TransitionDistribution oracle_classical(const PauliChannel& d, const PauliChannel& e) {
  return detail::symmetric_row(oracle_classical_rows(d, e));
}

/// Exact three-qubit simulation of superdense coding through the quantum
/// switch of D and E with the control in |+>, followed by a measurement of
/// the control in the {|+>, |->} basis.
inline SwitchOracleResult oracle_switch(const PauliChannel& d, const PauliChannel& e) {
  std::vector<CMatrix> kraus;
  for (const CMatrix& w : switch_kraus_operators(d, e)) kraus.push_back(detail::lift_skip_middle(w));
  const CMatrix plus_state = CMatrix(2, {0.5, 0.5, 0.5, 0.5});

  std::array<TransitionMatrix, 2> rows{};
  std::array<double, 2> branch_prob{};
  for (std::size_t x = 0; x < 4; ++x) {
    const CMatrix in = kron(detail::encoded_epr(x), plus_state);
    CMatrix out(8);
    for (const CMatrix& w : kraus) out += conjugate(w, in);
    DensityMatrix checked(out);  // the switch must be trace preserving

    for (int b = 0; b < 2; ++b) {
      CMatrix block = detail::project_control(checked.matrix(), b == 0);
      const double prob = block.trace().real();
      if (x == 0) {
        branch_prob[b] = prob;
      } else if (std::abs(prob - branch_prob[b]) > detail::kSymmetryTolerance) {
        throw std::logic_error("oracle_switch: control statistics depend on the input");
      }
      if (prob <= detail::kEmptyBranch) {
        rows[b][x] = {};
        rows[b][x][x] = 1.0;
        continue;
      }
      block *= Complex(1.0 / prob);
      rows[b][x] = bell_measure(DensityMatrix(block)).probs();
    }
  }

  SwitchOracleResult r;
  r.p_plus = branch_prob[0];
  r.transition_plus = detail::symmetric_row(rows[0]);
  r.transition_minus = detail::symmetric_row(rows[1]);
  r.capacity = 0.0;
  if (branch_prob[0] > detail::kEmptyBranch) {
    r.capacity += branch_prob[0] * (2.0 + detail::sum_plogp(r.transition_plus.probs()));
  }
  if (branch_prob[1] > detail::kEmptyBranch) {
    r.capacity += branch_prob[1] * (2.0 + detail::sum_plogp(r.transition_minus.probs()));
  }
  return r;
}

/// Sampled (control outcome, Bell cell) frequencies.
struct MonteCarloEstimate {
  std::uint64_t samples = 0;
  // [0] = |+> branch, [1] = |-> branch; cells indexed like TransitionDistribution.
  std::array<Probabilities4, 2> frequency{};
  std::array<Probabilities4, 2> standard_error{};

  double p_plus() const {
    return frequency[0][0] + frequency[0][1] + frequency[0][2] + frequency[0][3];
  }

  /// Conditional rows and mixture capacity computed from the frequencies.
  SwitchOracleResult as_oracle_result() const {
    SwitchOracleResult r;
    const std::array<double, 2> w = {p_plus(), 1.0 - p_plus()};
    double cap = 0.0;
    for (int b = 0; b < 2; ++b) {
      if (w[b] <= 0.0) continue;
      Probabilities4 row{};
      for (std::size_t k = 0; k < 4; ++k) row[k] = frequency[b][k] / w[b];
      (b == 0 ? r.transition_plus : r.transition_minus) = TransitionDistribution(row);
      cap += w[b] * (2.0 + detail::sum_plogp(row));
    }
    r.p_plus = w[0];
    r.capacity = cap;
    return r;
  }
};

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Pauli sample_pauli(const PauliChannel& ch, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  for (Pauli p : kAllPaulis) {
    acc += ch.prob(p);
    if (u < acc) return p;
  }
  // u landed in the rounding gap above the cumulative sum; take the last
  // label with nonzero probability.
  for (int k = 3; k >= 0; --k)
    if (ch.probs()[k] > 0.0) return static_cast<Pauli>(k);
  return Pauli::I;
}

}  // namespace detail

/// Draws n Kraus pairs (D_i, E_j). For Pauli operators the pair acts as
/// σ_j σ_i ⊗ I or σ_j σ_i ⊗ Z on (A, control), so the control reads |-> exactly
/// when σ_i and σ_j anticommute, and the Bell cell is the label of σ_j σ_i.
inline MonteCarloEstimate monte_carlo_switch(const PauliChannel& d, const PauliChannel& e,
                                             std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("monte_carlo_switch: sample count must be positive");
  std::mt19937_64 rng(seed);
  std::array<std::array<std::uint64_t, 4>, 2> counts{};
  for (std::uint64_t s = 0; s < n; ++s) {
    const Pauli i = detail::sample_pauli(d, rng);
    const Pauli j = detail::sample_pauli(e, rng);
    const int branch = anticommutes(i, j) ? 1 : 0;
    ++counts[branch][bell_outcome_of(pauli_product(j, i).index)];
  }
  MonteCarloEstimate est;
  est.samples = n;
  const double dn = static_cast<double>(n);
  for (int b = 0; b < 2; ++b)
    for (std::size_t k = 0; k < 4; ++k) {
      const double f = static_cast<double>(counts[b][k]) / dn;
      est.frequency[b][k] = f;
      est.standard_error[b][k] = std::sqrt(f * (1.0 - f) / dn);
    }
  return est;
}

/// I(X;Y) in bits.
inline double mutual_information(const JointDistribution& joint) {
  double total = 0.0;
  Probabilities4 px{}, py{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const double v = joint[x][y];
      if (!(v >= 0.0)) throw std::invalid_argument("mutual_information: negative probability");
      total += v;
      px[x] += v;
      py[y] += v;
    }
  if (std::abs(total - 1.0) > kRenormalizeLimit) {
    throw std::invalid_argument("mutual_information: joint distribution does not sum to 1");
  }
  double info = 0.0;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const double v = joint[x][y];
      if (v > 0.0) info += v * std::log2(v / (px[x] * py[y]));
    }
  return info;
}

/// Equiprobable sender over the superdense code, receiver row P(y|x) = row[x XOR y].
inline JointDistribution superdense_joint(const TransitionDistribution& row) {
  JointDistribution j{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) j[x][y] = 0.25 * row[x ^ y];
  return j;
}

}  // namespace qswitch
