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
#include <string>

#include "qswitch/density_matrix.hpp"
#include "qswitch/pauli.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

using Probabilities4 = std::array<double, 4>;

namespace detail {

// Shared normalization rule for 4-outcome distributions: reject negative
// entries and sums off by more than kRenormalizeLimit, otherwise divide by
// the sum.
inline Probabilities4 normalized_or_throw(Probabilities4 probs, const char* what) {
  double sum = 0.0;
  for (double& p : probs) {
    if (!std::isfinite(p)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
    if (p < 0.0) {
      if (p < -kNormTolerance) {
        throw std::invalid_argument(std::string(what) + ": negative probability");
      }
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRenormalizeLimit) {
    throw std::invalid_argument(std::string(what) + ": probabilities sum to " +
                                std::to_string(sum));
  }
  if (sum != 1.0) {
    for (double& p : probs) p /= sum;
  }
  return probs;
}

}  // namespace detail

/// ρ ↦ Σ_i p_i σ_i ρ σ_i over σ ∈ {I, X, Y, Z}.
class PauliChannel {
 public:
  PauliChannel() : probs_{1.0, 0.0, 0.0, 0.0} {}
  explicit PauliChannel(Probabilities4 probs)
      : probs_(detail::normalized_or_throw(probs, "PauliChannel")) {}

  static PauliChannel identity() { return PauliChannel(); }

  /// (1-p)ρ + p XρX
  static PauliChannel bit_flip(double p) {
    check_parameter(p);
    return PauliChannel({1.0 - p, p, 0.0, 0.0});
  }
  /// (1-q)ρ + q ZρZ
  static PauliChannel phase_flip(double q) {
    check_parameter(q);
    return PauliChannel({1.0 - q, 0.0, 0.0, q});
  }
  /// (1-p)ρ + (p/3)(XρX + YρY + ZρZ); p = 3/4 is fully depolarizing.
  static PauliChannel depolarizing(double p) {
    check_parameter(p);
    const double third = p / 3.0;
    return PauliChannel({1.0 - p, third, third, third});
  }
  /// (1-p) XρX + p YρY; entanglement breaking at p = 1/2.
  static PauliChannel partially_entanglement_breaking(double p) {
    check_parameter(p);
    return PauliChannel({0.0, 1.0 - p, p, 0.0});
  }

  const Probabilities4& probs() const { return probs_; }
  double prob(Pauli p) const { return probs_[index_of(p)]; }
  double operator[](std::size_t i) const { return probs_.at(i); }

  friend bool operator==(const PauliChannel&, const PauliChannel&) = default;

 private:
  static void check_parameter(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("channel parameter must lie in [0,1]");
    }
  }

  Probabilities4 probs_;
};

/// Applies the channel to qubit `target` of `rho`, identity on the rest.
inline DensityMatrix channel_apply(const PauliChannel& ch, const DensityMatrix& rho,
                                   std::size_t target) {
  const std::size_t n = rho.num_qubits();
  if (target >= n) {
    throw std::invalid_argument("channel_apply: target qubit " + std::to_string(target) +
                                " out of range for " + std::to_string(n) + "-qubit state");
  }
  CMatrix out(rho.dim());
  for (Pauli p : kAllPaulis) {
    const double w = ch.prob(p);
    if (w == 0.0) continue;
    out += w * conjugate(embed_single(pauli_matrix(p), target, n), rho.matrix());
  }
  return DensityMatrix(std::move(out));
}

}  // namespace qswitch
