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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "qswitch/capacity.hpp"
#include "qswitch/oracle.hpp"

namespace qswitch {

/// Uniformly distributed point of the probability simplex (flat Dirichlet).
inline PauliChannel random_pauli_channel(std::mt19937_64& rng) {
  Probabilities4 w{};
  double sum = 0.0;
  for (double& x : w) {
    // 1 - u lies in (0, 1], so the log is finite.
    x = -std::log(1.0 - detail::uniform01(rng));
    sum += x;
  }
  for (double& x : w) x /= sum;
  return PauliChannel(w);
}

/// Largest deviations between the exact oracle and the closed forms.
struct OracleDeviation {
  double classical_cell = 0.0;     // oracle_classical vs composed channel's Bell row
  double classical_capacity = 0.0;
  double switch_cell = 0.0;        // conditional Bell rows of both branches
  double switch_p_plus = 0.0;
  double switch_capacity = 0.0;
  double kraus_completeness = 0.0;  // max |Σ W†W - I| entry

  double max() const {
    return std::max({classical_cell, classical_capacity, switch_cell, switch_p_plus,
                     switch_capacity, kraus_completeness});
  }
};

inline double kraus_completeness_error(const PauliChannel& d, const PauliChannel& e) {
  CMatrix sum(4);
  for (const CMatrix& w : switch_kraus_operators(d, e)) sum += w.adjoint() * w;
  return max_abs_diff(sum, CMatrix::identity(4));
}

inline OracleDeviation compare_with_oracle(const PauliChannel& d, const PauliChannel& e) {
  OracleDeviation dev;
  const TransitionDistribution oc = oracle_classical(d, e);
  const TransitionDistribution cc = epr_transition(compose_classical(d, e));
  for (std::size_t k = 0; k < 4; ++k) dev.classical_cell = std::max(dev.classical_cell, std::abs(oc[k] - cc[k]));
  dev.classical_capacity =
      std::abs(capacity_from_transition(oc) - capacity_classical_trajectory(d, e));

  const SwitchOracleResult os = oracle_switch(d, e);
  const SwitchComposition s = compose_switch(d, e);
  dev.switch_p_plus = std::abs(os.p_plus - s.p_plus);
  dev.switch_capacity = std::abs(os.capacity - capacity_quantum_trajectory(d, e));
  if (s.p_plus > 0.0) {
    const TransitionDistribution t = epr_transition(collapse(s, ControlOutcome::Plus).second);
    for (std::size_t k = 0; k < 4; ++k)
      dev.switch_cell = std::max(dev.switch_cell, std::abs(os.transition_plus[k] - t[k]));
  }
  if (s.p_minus() > 0.0) {
    const TransitionDistribution t = epr_transition(collapse(s, ControlOutcome::Minus).second);
    for (std::size_t k = 0; k < 4; ++k)
      dev.switch_cell = std::max(dev.switch_cell, std::abs(os.transition_minus[k] - t[k]));
  }
  dev.kraus_completeness = kraus_completeness_error(d, e);
  return dev;
}

/// Worst-case deviations over `pairs` random channel pairs drawn from `seed`.
inline OracleDeviation verify_random_pairs(std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OracleDeviation worst;
  for (std::size_t n = 0; n < pairs; ++n) {
    const PauliChannel d = random_pauli_channel(rng);
    const PauliChannel e = random_pauli_channel(rng);
    const OracleDeviation dev = compare_with_oracle(d, e);
    worst.classical_cell = std::max(worst.classical_cell, dev.classical_cell);
    worst.classical_capacity = std::max(worst.classical_capacity, dev.classical_capacity);
    worst.switch_cell = std::max(worst.switch_cell, dev.switch_cell);
    worst.switch_p_plus = std::max(worst.switch_p_plus, dev.switch_p_plus);
    worst.switch_capacity = std::max(worst.switch_capacity, dev.switch_capacity);
    worst.kraus_completeness = std::max(worst.kraus_completeness, dev.kraus_completeness);
  }
  return worst;
}

}  // namespace qswitch
