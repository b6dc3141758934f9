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

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "qswitch/channel.hpp"

namespace qswitch {

/// Distribution over the four Bell-measurement outcomes. Cell k holds the
/// outcome whose two-bit label b0b1 has decimal value k:
///   0 → Φ+, 1 → Ψ+, 2 → Φ-, 3 → Ψ-.
class TransitionDistribution {
 public:
  TransitionDistribution() : probs_{1.0, 0.0, 0.0, 0.0} {}
  explicit TransitionDistribution(Probabilities4 probs)
      : probs_(detail::normalized_or_throw(probs, "TransitionDistribution")) {}

  const Probabilities4& probs() const { return probs_; }
  double operator[](std::size_t k) const { return probs_.at(k); }

 private:
  Probabilities4 probs_;
};

/// Bell-outcome label of the error σ acting on qubit A of |Φ+>: an X
/// component sets b1, a Z component sets b0.
constexpr std::size_t bell_outcome_of(Pauli p) {
  const bool has_x = p == Pauli::X || p == Pauli::Y;
  const bool has_z = p == Pauli::Z || p == Pauli::Y;
  return (has_z ? 2u : 0u) | (has_x ? 1u : 0u);
}

/// Encoding operator applied by the sender for symbol b0b1: X^b1 Z^b0.
inline CMatrix superdense_encoder(std::size_t symbol) {
  if (symbol > 3) throw std::out_of_range("superdense symbol must be in [0,3]");
  CMatrix u = CMatrix::identity(2);
  if (symbol & 2u) u = pauli_matrix(Pauli::Z) * u;
  if (symbol & 1u) u = pauli_matrix(Pauli::X) * u;
  return u;
}

/// Bell state vector for outcome `k` on (A, B), A the most significant qubit.
inline std::array<Complex, 4> bell_state(std::size_t k) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (k) {
    case 0: return {s, 0.0, 0.0, s};    // Φ+
    case 1: return {0.0, s, s, 0.0};    // Ψ+
    case 2: return {s, 0.0, 0.0, -s};   // Φ-
    case 3: return {0.0, s, -s, 0.0};   // Ψ-
    default: throw std::out_of_range("Bell outcome must be in [0,3]");
  }
}

inline CMatrix bell_projector(std::size_t k) {
  const auto v = bell_state(k);
  return CMatrix::outer(v);
}

/// |Φ+><Φ+| shared by sender (A) and receiver (B).
inline DensityMatrix epr_pair() { return DensityMatrix(bell_projector(0)); }

/// Outcome probabilities Tr(P_k ρ) of a Bell-basis measurement.
inline TransitionDistribution bell_measure(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("bell_measure: expected a two-qubit state");
  Probabilities4 probs{};
  for (std::size_t k = 0; k < 4; ++k) {
    probs[k] = (bell_projector(k) * rho.matrix()).trace().real();
  }
  return TransitionDistribution(probs);
}

/// Outcome distribution when qubit A of |Φ+> passes through `ch`.
inline TransitionDistribution epr_transition(const PauliChannel& ch) {
  Probabilities4 probs{};
  for (Pauli p : kAllPaulis) probs[bell_outcome_of(p)] += ch.prob(p);
  return TransitionDistribution(probs);
}

}  // namespace qswitch
