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
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "qswitch/bell.hpp"
#include "qswitch/trajectory.hpp"

namespace qswitch {

/// x·log2(x) with the continuous extension 0 ↦ 0.
inline double xlog2x(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("xlog2x: negative argument");
  return x == 0.0 ? 0.0 : x * std::log2(x);
}

/// x·log2(x / divisor), 0 at x = 0.
inline double xlog2_ratio(double x, double divisor) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("xlog2_ratio: negative argument");
  return x == 0.0 ? 0.0 : x * std::log2(x / divisor);
}

inline double binary_entropy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0,1]");
  return -xlog2x(a) - xlog2x(1.0 - a);
}

/// Capacity of an m-ary symmetric channel under an equiprobable source:
/// log2(m) + Σ_i t_i log2 t_i, where `row` is the transition row of any input.
inline double capacity_from_transition(std::size_t alphabet, std::span<const double> row) {
  if (alphabet < 2 || row.size() != alphabet) {
    throw std::invalid_argument("capacity_from_transition: row length must equal alphabet size");
  }
  double sum = 0.0;
  for (double t : row) {
    if (t < 0.0) throw std::invalid_argument("capacity_from_transition: negative probability");
    sum += t;
  }
  if (std::abs(sum - 1.0) > kRenormalizeLimit) {
    throw std::invalid_argument("capacity_from_transition: row does not sum to 1");
  }
  double c = std::log2(static_cast<double>(alphabet));
  for (double t : row) c += xlog2x(t);
  return c;
}

inline double capacity_from_transition(const TransitionDistribution& t) {
  return capacity_from_transition(4, t.probs());
}

/// Entanglement-assisted classical capacity of a Pauli channel, in bits.
inline double capacity_pauli(const PauliChannel& ch) {
  const auto& p = ch.probs();
  return 2.0 + xlog2x(p[0]) + xlog2x(p[1]) + xlog2x(p[2]) + xlog2x(p[3]);
}

namespace detail {

// Composition coefficients without renormalization so the classical and
// switched capacities agree bit for bit when the |-> branch is empty.
inline std::array<double, 4> classical_coefficients(const PauliChannel& d, const PauliChannel& e) {
  const auto& p = d.probs();
  const auto& q = e.probs();
  return {
      p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3],
      p[0] * q[1] + p[1] * q[0] + p[2] * q[3] + p[3] * q[2],
      p[0] * q[2] + p[2] * q[0] + p[3] * q[1] + p[1] * q[3],
      p[0] * q[3] + p[3] * q[0] + p[1] * q[2] + p[2] * q[1],
  };
}

}  // namespace detail

/// Capacity of D and E traversed in a definite order.
inline double capacity_classical_trajectory(const PauliChannel& d, const PauliChannel& e) {
  const auto a = detail::classical_coefficients(d, e);
  return 2.0 + xlog2x(a[0]) + xlog2x(a[1]) + xlog2x(a[2]) + xlog2x(a[3]);
}

/// Switch capacity as the outcome-weighted average of the two collapsed
/// channels' capacities. A zero-probability branch contributes nothing.
inline double capacity_quantum_trajectory_mixture(const PauliChannel& d, const PauliChannel& e) {
  const SwitchComposition s = compose_switch(d, e);
  double c = 0.0;
  for (ControlOutcome o : {ControlOutcome::Plus, ControlOutcome::Minus}) {
    const double w = o == ControlOutcome::Plus ? s.p_plus : s.p_minus();
    if (w <= 0.0) continue;
    c += w * capacity_pauli(collapse(s, o).second);
  }
  return c;
}

/// Capacity of D and E in a quantum switch with the control in |+>, measured
/// in the {|+>, |->} basis and the outcome made available to the receiver:
///   2 + H(p+) + A0 log A0 + Σ_k A_k+ log A_k+ + Σ_k A_k- log A_k-.
inline double capacity_quantum_trajectory(const PauliChannel& d, const PauliChannel& e) {
  const SwitchComposition s = compose_switch(d, e);
  double c = 2.0 + binary_entropy(s.p_plus) + xlog2x(s.a0);
  for (std::size_t k = 0; k < 3; ++k) c += xlog2x(s.a_plus[k]) + xlog2x(s.a_minus[k]);
#ifndef NDEBUG
  if (std::abs(c - capacity_quantum_trajectory_mixture(d, e)) > 1e-12) {
    throw std::logic_error("capacity_quantum_trajectory: closed form disagrees with mixture");
  }
#endif
  return c;
}

/// Upper bound for any definite-order composition: the weaker channel.
inline double bottleneck(const PauliChannel& d, const PauliChannel& e) {
  return std::min(capacity_pauli(d), capacity_pauli(e));
}

/// Classical capacities in bits, quantum capacities in qubits per use
/// (half the classical value via the teleportation trade-off).
struct CapacityReport {
  double c_ec = 0.0;  // classical trajectory
  double c_eq = 0.0;  // quantum switch
  double c_eb = 0.0;  // bottleneck
  double gain = 0.0;
  double violation = 0.0;
  double q_ec = 0.0;
  double q_eq = 0.0;
  double q_eb = 0.0;
};

/// Throws std::logic_error naming the first broken invariant. Comparisons use
/// a 1e-12 deadband; stored values are not adjusted.
inline void validate(const CapacityReport& r) {
  constexpr double eps = 1e-12;
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("CapacityReport invariant violated: ") + what);
  };
  for (double c : {r.c_ec, r.c_eq, r.c_eb}) require(c >= -eps && c <= 2.0 + eps, "c in [0,2]");
  for (double q : {r.q_ec, r.q_eq, r.q_eb}) require(q >= -eps && q <= 1.0 + eps, "q in [0,1]");
  require(r.gain == r.c_eq - r.c_ec, "gain = c_eq - c_ec");
  require(r.gain >= -eps, "gain >= 0");
  require(r.violation == std::max(0.0, r.c_eq - r.c_eb), "violation = max(0, c_eq - c_eb)");
  require(r.q_ec == r.c_ec / 2 && r.q_eq == r.c_eq / 2 && r.q_eb == r.c_eb / 2, "q = c/2");
}

inline CapacityReport gain_and_violation(const PauliChannel& d, const PauliChannel& e) {
  CapacityReport r;
  r.c_ec = capacity_classical_trajectory(d, e);
  r.c_eq = capacity_quantum_trajectory(d, e);
  r.c_eb = bottleneck(d, e);
  r.gain = r.c_eq - r.c_ec;
  r.violation = std::max(0.0, r.c_eq - r.c_eb);
  r.q_ec = r.c_ec / 2;
  r.q_eq = r.c_eq / 2;
  r.q_eb = r.c_eb / 2;
  return r;
}

enum class FamilyKind { BitPhaseFlip, EntanglementBreaking, Depolarizing, GeneralPauli };
enum class Trajectory { Classical, Quantum };

inline std::string_view name_of(FamilyKind k) {
  switch (k) {
    case FamilyKind::BitPhaseFlip: return "bitphase";
    case FamilyKind::EntanglementBreaking: return "entanglement-breaking";
    case FamilyKind::Depolarizing: return "depolarizing";
    case FamilyKind::GeneralPauli: return "general";
  }
  return "?";
}

/// A named pair of channels D, E. The parametric families are
///   BitPhaseFlip:          D = bit flip(p),  E = phase flip(q)
///   EntanglementBreaking:  D = (1-p)X + pY,  E = (1-q)X + qY
///   Depolarizing:          D = depolarizing(p), E = depolarizing(q)
/// GeneralPauli carries two explicit channels instead.
class ChannelFamily {
 public:
  static ChannelFamily parametric(FamilyKind kind, double p, double q) {
    if (kind == FamilyKind::GeneralPauli) {
      throw std::invalid_argument("GeneralPauli family needs explicit channels");
    }
    if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) {
      throw std::invalid_argument("family parameters must lie in [0,1]");
    }
    return ChannelFamily(kind, p, q, {}, {});
  }
  static ChannelFamily general(PauliChannel d, PauliChannel e) {
    return ChannelFamily(FamilyKind::GeneralPauli, 0.0, 0.0, d, e);
  }

  FamilyKind kind() const { return kind_; }
  double p() const { return p_; }
  double q() const { return q_; }

  std::pair<PauliChannel, PauliChannel> channels() const {
    switch (kind_) {
      case FamilyKind::BitPhaseFlip:
        return {PauliChannel::bit_flip(p_), PauliChannel::phase_flip(q_)};
      case FamilyKind::EntanglementBreaking:
        return {PauliChannel::partially_entanglement_breaking(p_),
                PauliChannel::partially_entanglement_breaking(q_)};
      case FamilyKind::Depolarizing:
        return {PauliChannel::depolarizing(p_), PauliChannel::depolarizing(q_)};
      case FamilyKind::GeneralPauli: return {d_, e_};
    }
    throw std::logic_error("unknown family");
  }

 private:
  ChannelFamily(FamilyKind kind, double p, double q, PauliChannel d, PauliChannel e)
      : kind_(kind), p_(p), q_(q), d_(d), e_(e) {}

  FamilyKind kind_;
  double p_;
  double q_;
  PauliChannel d_;
  PauliChannel e_;
};

/// Family capacities from their own closed forms, independent of the general
/// composition formulas. Nonnegative quantities are written in factored form
/// (e.g. 1-p-q+2pq as (1-p)(1-q)+pq) so rounding cannot push them below 0.
inline double family_capacity(const ChannelFamily& f, Trajectory t) {
  const double p = f.p(), q = f.q();
  const bool quantum = t == Trajectory::Quantum;
  switch (f.kind()) {
    case FamilyKind::BitPhaseFlip: {
      const double c = 2.0 + xlog2x((1 - p) * (1 - q)) + xlog2x(p * (1 - q)) +
                       xlog2x((1 - p) * q) + xlog2x(p * q);
      return quantum ? c + binary_entropy(1.0 - p * q) : c;
    }
    case FamilyKind::EntanglementBreaking: {
      if (quantum) return 2.0;
      const double same = (1 - p) * (1 - q) + p * q;     // 1 - p - q + 2pq
      const double flip = p * (1 - q) + q * (1 - p);     // p + q - 2pq
      return 2.0 + xlog2x(same) + xlog2x(flip);
    }
    case FamilyKind::Depolarizing: {
      const double none = (1 - p) * (1 - q) + p * q / 3.0;  // 1 - p - q + 4pq/3
      if (!quantum) {
        const double any = p * (1 - q) + q * (1 - p) + 2.0 * p * q / 3.0;  // p + q - 4pq/3
        // (p+q-4pq/3) log2((3p+3q-4pq)/9)
        return 2.0 + xlog2x(none) + xlog2_ratio(any, 3.0);
      }
      const double single = p * (1 - q) + q * (1 - p);  // p + q - 2pq
      const double anti = 2.0 * p * q / 3.0;
      return 2.0 + binary_entropy(1.0 - anti) + xlog2x(none) + xlog2_ratio(single, 3.0) +
             xlog2_ratio(anti, 3.0);  // (2pq/3) log2(2pq/9)
    }
    case FamilyKind::GeneralPauli: {
      const auto [d, e] = f.channels();
      return quantum ? capacity_quantum_trajectory(d, e) : capacity_classical_trajectory(d, e);
    }
  }
  throw std::logic_error("unknown family");
}

/// Single depolarizing channel, three reference capacities in bits.
struct ReferenceCurves {
  double c_symbol = 0.0;      // entanglement-assisted, joint two-bit symbols
  double c_bit = 0.0;         // entanglement-assisted, bits decoded separately
  double c_unassisted = 0.0;  // no shared entanglement
};

inline ReferenceCurves depolarizing_reference_curves(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("depolarizing parameter outside [0,1]");
  // Each bit of the decoded pair flips with probability 2p/3.
  const double flip = 2.0 * p / 3.0;
  const double keep = 1.0 - flip;
  ReferenceCurves r;
  r.c_symbol = 2.0 + xlog2x(1.0 - p) + xlog2_ratio(p, 3.0);
  r.c_bit = 2.0 + (2.0 * keep) * std::log2(keep) + (flip == 0.0 ? 0.0 : (2.0 * flip) * std::log2(flip));
  r.c_unassisted = 1.0 + keep * std::log2(keep) + (flip == 0.0 ? 0.0 : flip * std::log2(flip));
  return r;
}

/// Quantum capacities for the bit-flip/phase-flip switch with p = q.
struct BitPhaseQuantumBounds {
  double q_lb = 0.0;  // unassisted coherent-information lower bound
  double q_ub = 0.0;  // two-way assisted upper bound
  double q_eb = 0.0;  // entanglement-assisted bottleneck
  double q_eq = 0.0;  // entanglement-assisted switch capacity
};

inline BitPhaseQuantumBounds quantum_bounds_bitphase(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bit/phase parameter outside [0,1]");
  const double h = binary_entropy(p);
  const double p2 = p * p;
  BitPhaseQuantumBounds b;
  b.q_lb = p2 + std::max(0.0, 1.0 - p2 - 2.0 * h + binary_entropy(p2));
  b.q_ub = 1.0 - (1.0 - p) * h;
  b.q_eb = 1.0 - h / 2.0;
  b.q_eq = 1.0 + 0.5 * (binary_entropy(1.0 - p2) + xlog2x((1 - p) * (1 - p)) +
                        2.0 * xlog2x(p * (1 - p)) + xlog2x(p2));
  return b;
}

}  // namespace qswitch
