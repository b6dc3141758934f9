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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qswitch/capacity.hpp"
#include "qswitch/verify.hpp"

namespace qswitch {
namespace {

TEST(Xlog2x, Examples) {
  EXPECT_EQ(xlog2x(0.0), 0.0);
  EXPECT_EQ(xlog2x(1.0), 0.0);
  EXPECT_EQ(xlog2x(0.5), -0.5);
  EXPECT_THROW(xlog2x(-1e-3), std::domain_error);
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  // -0.625 log2 0.625 - 0.375 log2 0.375
  EXPECT_NEAR(binary_entropy(0.625), 0.954434002924965, 1e-12);
  EXPECT_THROW(binary_entropy(1.01), std::domain_error);
  EXPECT_THROW(binary_entropy(-0.01), std::domain_error);
}

TEST(CapacityFromTransition, Examples) {
  EXPECT_EQ(capacity_from_transition(TransitionDistribution({1, 0, 0, 0})), 2.0);
  EXPECT_EQ(capacity_from_transition(TransitionDistribution({0.25, 0.25, 0.25, 0.25})), 0.0);
  for (double p : {0.1, 0.3, 0.5, 0.75, 0.9}) {
    const double direct = 2 + (1 - p) * std::log2(1 - p) + p * std::log2(p / 3);
    EXPECT_NEAR(capacity_from_transition(epr_transition(PauliChannel::depolarizing(p))), direct, 1e-14);
  }
  const std::vector<double> binary = {0.9, 0.1};
  EXPECT_NEAR(capacity_from_transition(2, binary), 1 - binary_entropy(0.1), 1e-15);
  EXPECT_THROW(capacity_from_transition(4, binary), std::invalid_argument);
  const std::vector<double> bad = {0.5, 0.4};
  EXPECT_THROW(capacity_from_transition(2, bad), std::invalid_argument);
}

TEST(CapacityPauli, Examples) {
  EXPECT_EQ(capacity_pauli(PauliChannel::identity()), 2.0);
  EXPECT_EQ(capacity_pauli(PauliChannel({0.25, 0.25, 0.25, 0.25})), 0.0);
  EXPECT_EQ(capacity_pauli(PauliChannel({0, 0.5, 0.5, 0})), 1.0);
}

TEST(CapacityClassicalTrajectory, Examples) {
  EXPECT_EQ(capacity_classical_trajectory(PauliChannel::identity(), PauliChannel::identity()), 2.0);
  const PauliChannel full = PauliChannel::depolarizing(0.75);
  EXPECT_NEAR(capacity_classical_trajectory(full, full), 0.0, 1e-15);
  const PauliChannel eb = PauliChannel::partially_entanglement_breaking(0.5);
  EXPECT_NEAR(capacity_classical_trajectory(eb, eb), 1.0, 1e-15);
}

TEST(CapacityQuantumTrajectory, Examples) {
  const PauliChannel full = PauliChannel::depolarizing(0.75);
  EXPECT_NEAR(capacity_quantum_trajectory(full, full), 0.204, 5e-4);
  // 2 + H(0.625) + 0.25 log2 0.25 + 6 * 0.125 log2 0.125
  EXPECT_NEAR(capacity_quantum_trajectory(full, full), 2 + 0.954434002924965 - 0.5 - 2.25, 1e-12);
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0})
    for (double q : {0.0, 0.4, 1.0}) {
      EXPECT_NEAR(capacity_quantum_trajectory(PauliChannel::partially_entanglement_breaking(p),
                                              PauliChannel::partially_entanglement_breaking(q)),
                  2.0, 1e-12);
    }
  EXPECT_NEAR(capacity_quantum_trajectory(PauliChannel::bit_flip(0.5), PauliChannel::phase_flip(1.0)),
              2.0, 1e-12);
}

TEST(Bottleneck, Examples) {
  EXPECT_EQ(bottleneck(PauliChannel::bit_flip(0.5), PauliChannel::phase_flip(1.0)), 1.0);
  const PauliChannel e({0.4, 0.3, 0.2, 0.1});
  EXPECT_EQ(bottleneck(PauliChannel::identity(), e), capacity_pauli(e));
  const PauliChannel full = PauliChannel::depolarizing(0.75);
  EXPECT_EQ(bottleneck(full, full), 0.0);
}

TEST(GainAndViolation, BitPhaseExtremes) {
  for (double p : {0.5, 0.55, 0.625, std::sqrt(0.5), 0.8, 0.9, 1.0}) {
    const double q = 0.5 / p;
    const CapacityReport r = gain_and_violation(PauliChannel::bit_flip(p), PauliChannel::phase_flip(q));
    EXPECT_NEAR(r.gain, 1.0, 1e-9) << p;
  }
  for (auto [p, q] : {std::pair{0.5, 1.0}, std::pair{1.0, 0.5}}) {
    const CapacityReport r = gain_and_violation(PauliChannel::bit_flip(p), PauliChannel::phase_flip(q));
    EXPECT_NEAR(r.violation, 1.0, 1e-9);
    EXPECT_NEAR(r.q_eq, 1.0, 1e-12);
    EXPECT_NEAR(r.q_eb, 0.5, 1e-12);
  }
}

TEST(GainAndViolation, DepolarizingCorner) {
  const PauliChannel d = PauliChannel::depolarizing(1.0);
  const CapacityReport r = gain_and_violation(d, d);
  EXPECT_NEAR(r.gain, 0.918, 5e-4);
  EXPECT_NEAR(r.violation, 0.528, 5e-4);
  EXPECT_NO_THROW(validate(r));
}

TEST(FamilyCapacity, KnownValues) {
  EXPECT_EQ(family_capacity(ChannelFamily::parametric(FamilyKind::EntanglementBreaking, 0.3, 0.9),
                            Trajectory::Quantum),
            2.0);
  EXPECT_NEAR(family_capacity(ChannelFamily::parametric(FamilyKind::Depolarizing, 0.75, 0.75),
                              Trajectory::Quantum),
              0.2044, 1e-4);
  // The switch adds exactly H(1 - pq) for the bit/phase pair.
  const auto f = ChannelFamily::parametric(FamilyKind::BitPhaseFlip, 0.4, 0.7);
  EXPECT_NEAR(family_capacity(f, Trajectory::Quantum) - family_capacity(f, Trajectory::Classical),
              binary_entropy(1 - 0.28), 1e-14);
  EXPECT_THROW(ChannelFamily::parametric(FamilyKind::Depolarizing, 1.2, 0.0), std::invalid_argument);
  EXPECT_THROW(ChannelFamily::parametric(FamilyKind::GeneralPauli, 0.1, 0.1), std::invalid_argument);
}

TEST(FamilyCapacity, MatchesGeneralFormulasOnGrid) {
  for (FamilyKind kind : {FamilyKind::BitPhaseFlip, FamilyKind::EntanglementBreaking, FamilyKind::Depolarizing})
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; j <= 100; ++j) {
        const auto f = ChannelFamily::parametric(kind, i / 100.0, j / 100.0);
        const auto [d, e] = f.channels();
        ASSERT_NEAR(family_capacity(f, Trajectory::Classical), capacity_classical_trajectory(d, e), 1e-12)
            << name_of(kind) << " " << i << "," << j;
        ASSERT_NEAR(family_capacity(f, Trajectory::Quantum), capacity_quantum_trajectory(d, e), 1e-12)
            << name_of(kind) << " " << i << "," << j;
      }
}

TEST(FamilyCapacity, GeneralFamilyDelegates) {
  const PauliChannel d({0.7, 0.1, 0.1, 0.1}), e({0.6, 0.2, 0.1, 0.1});
  const auto f = ChannelFamily::general(d, e);
  EXPECT_EQ(family_capacity(f, Trajectory::Quantum), capacity_quantum_trajectory(d, e));
  EXPECT_EQ(family_capacity(f, Trajectory::Classical), capacity_classical_trajectory(d, e));
}

TEST(ReferenceCurves, Examples) {
  const ReferenceCurves zero = depolarizing_reference_curves(0.0);
  EXPECT_EQ(zero.c_symbol, 2.0);
  EXPECT_EQ(zero.c_bit, 2.0);
  EXPECT_EQ(zero.c_unassisted, 1.0);
  const ReferenceCurves full = depolarizing_reference_curves(0.75);
  EXPECT_NEAR(full.c_symbol, 0.0, 1e-12);
  EXPECT_NEAR(full.c_bit, 0.0, 1e-12);
  EXPECT_NEAR(full.c_unassisted, 0.0, 1e-12);
  EXPECT_THROW(depolarizing_reference_curves(1.5), std::domain_error);
}

TEST(ReferenceCurves, OrderingOnGrid) {
  for (int k = 0; k <= 1000; ++k) {
    const double p = k / 1000.0;
    const ReferenceCurves r = depolarizing_reference_curves(p);
    EXPECT_EQ(r.c_unassisted, r.c_bit / 2) << p;
    EXPECT_GE(r.c_symbol, r.c_bit - 1e-12) << p;
    EXPECT_NEAR(r.c_symbol, capacity_pauli(PauliChannel::depolarizing(p)), 1e-14);
    // Two independent binary symmetric channels with flip probability 2p/3.
    EXPECT_NEAR(r.c_bit, 2 * (1 - binary_entropy(2 * p / 3)), 1e-14);
  }
}

TEST(QuantumBounds, Examples) {
  for (double p : {0.0, 1.0}) {
    const BitPhaseQuantumBounds b = quantum_bounds_bitphase(p);
    EXPECT_EQ(b.q_lb, 1.0);
    EXPECT_EQ(b.q_ub, 1.0);
    EXPECT_EQ(b.q_eb, 1.0);
    EXPECT_EQ(b.q_eq, 1.0);
  }
  EXPECT_EQ(quantum_bounds_bitphase(0.5).q_eb, 0.5);
  EXPECT_THROW(quantum_bounds_bitphase(-0.1), std::domain_error);
}

TEST(QuantumBounds, SwitchCapacityAgreesWithGeneralForm) {
  for (int k = 0; k <= 200; ++k) {
    const double p = k / 200.0;
    const BitPhaseQuantumBounds b = quantum_bounds_bitphase(p);
    const CapacityReport r = gain_and_violation(PauliChannel::bit_flip(p), PauliChannel::phase_flip(p));
    EXPECT_NEAR(b.q_eq, r.q_eq, 1e-12) << p;
    EXPECT_NEAR(b.q_eb, r.q_eb, 1e-12) << p;
  }
}

TEST(QuantumBounds, SandwichOnOpenInterval) {
  for (int k = 1; k < 1000; ++k) {
    const BitPhaseQuantumBounds b = quantum_bounds_bitphase(k / 1000.0);
    EXPECT_LE(b.q_lb, b.q_eq + 1e-9) << k;
    EXPECT_LE(b.q_eq, b.q_ub + 1e-9) << k;
  }
}

class CapacityProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
};

TEST_F(CapacityProperties, OrderingOnRandomPairs) {
  for (int n = 0; n < 1000; ++n) {
    const PauliChannel d = random_pauli_channel(rng), e = random_pauli_channel(rng);
    const CapacityReport r = gain_and_violation(d, e);
    EXPECT_LE(r.c_ec, r.c_eb + 1e-12);
    EXPECT_LE(r.c_ec, r.c_eq + 1e-12);
    EXPECT_GE(r.gain, -1e-12);
    EXPECT_NO_THROW(validate(r));
    EXPECT_NEAR(capacity_quantum_trajectory(d, e), capacity_quantum_trajectory_mixture(d, e), 1e-12);
  }
}

TEST_F(CapacityProperties, NoGainWithoutMinusBranch) {
  for (int n = 0; n < 200; ++n) {
    const double p = detail::uniform01(rng), q = detail::uniform01(rng);
    const PauliChannel d = PauliChannel::bit_flip(p), e = PauliChannel::bit_flip(q);
    EXPECT_EQ(capacity_quantum_trajectory(d, e), capacity_classical_trajectory(d, e));
    const PauliChannel z1({1 - p, 0, 0, p}), z2({1 - q, 0, 0, q});
    EXPECT_NEAR(capacity_quantum_trajectory(z1, z2), capacity_classical_trajectory(z1, z2), 1e-12);
    EXPECT_EQ(gain_and_violation(z1, z2).gain, 0.0);
  }
}

TEST(CapacityReportValidation, RejectsBrokenInvariants) {
  CapacityReport r = gain_and_violation(PauliChannel::bit_flip(0.3), PauliChannel::phase_flip(0.3));
  EXPECT_NO_THROW(validate(r));
  r.gain += 0.1;
  EXPECT_THROW(validate(r), std::logic_error);
}

}  // namespace
}  // namespace qswitch
