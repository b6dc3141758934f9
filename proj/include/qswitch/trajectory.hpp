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
#include <array>
#include <stdexcept>
#include <utility>

#include "qswitch/channel.hpp"

namespace qswitch {

/// Resultant channel of two Pauli channels placed in a quantum switch with
/// the control qubit prepared in |+>, split by the control measurement
/// outcome. Index k of `a_plus`/`a_minus` refers to σ_{k+1} (X, Y, Z).
struct SwitchComposition {
  double a0 = 1.0;
  std::array<double, 3> a_plus{};
  std::array<double, 3> a_minus{};
  double p_plus = 1.0;

  double p_minus() const { return a_minus[0] + a_minus[1] + a_minus[2]; }
};

enum class ControlOutcome { Plus, Minus };

/// Channel D followed by channel E in a fixed order (Kraus operators E_j D_i).
/// Pauli channels compose commutatively, so the order does not matter.
inline PauliChannel compose_classical(const PauliChannel& d, const PauliChannel& e) {
  const auto& p = d.probs();
  const auto& q = e.probs();
  // Grouped in swap-symmetric pairs so compose_classical(d, e) and
  // compose_classical(e, d) round identically.
  return PauliChannel({
      (p[0] * q[0] + p[1] * q[1]) + (p[2] * q[2] + p[3] * q[3]),
      (p[0] * q[1] + p[1] * q[0]) + (p[2] * q[3] + p[3] * q[2]),
      (p[0] * q[2] + p[2] * q[0]) + (p[3] * q[1] + p[1] * q[3]),
      (p[0] * q[3] + p[3] * q[0]) + (p[1] * q[2] + p[2] * q[1]),
  });
}

/// Quantum-switch composition. Pairs of anticommuting errors from the two
/// channels flip the control to |->; every other pair leaves it in |+>.
inline SwitchComposition compose_switch(const PauliChannel& d, const PauliChannel& e) {
  const auto& p = d.probs();
  const auto& q = e.probs();
  SwitchComposition s;
  s.a0 = p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
  s.a_plus = {p[0] * q[1] + p[1] * q[0], p[0] * q[2] + p[2] * q[0], p[0] * q[3] + p[3] * q[0]};
  s.a_minus = {p[2] * q[3] + p[3] * q[2], p[3] * q[1] + p[1] * q[3], p[1] * q[2] + p[2] * q[1]};
  // Taken as the complement of the minus mass so that a vanishing minus
  // branch gives p_plus == 1 exactly.
  s.p_plus = std::max(0.0, 1.0 - s.p_minus());
  return s;
}

/// Post-measurement channel and its probability for a given control outcome.
/// Throws std::domain_error when the requested branch has zero probability.
inline std::pair<double, PauliChannel> collapse(const SwitchComposition& s, ControlOutcome o) {
  if (o == ControlOutcome::Plus) {
    if (!(s.p_plus > 0.0)) throw std::domain_error("collapse: |+> branch has zero probability");
    const double w = s.p_plus;
    return {w, PauliChannel({s.a0 / w, s.a_plus[0] / w, s.a_plus[1] / w, s.a_plus[2] / w})};
  }
  const double w = s.p_minus();
  if (!(w > 0.0)) throw std::domain_error("collapse: |-> branch has zero probability");
  return {w, PauliChannel({0.0, s.a_minus[0] / w, s.a_minus[1] / w, s.a_minus[2] / w})};
}

}  // namespace qswitch
