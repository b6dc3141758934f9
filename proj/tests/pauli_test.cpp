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

#include <random>

#include "qswitch/pauli.hpp"
#include "test_util.hpp"

namespace qswitch {
namespace {

TEST(PauliProduct, TableExamples) {
  EXPECT_EQ(pauli_product(Pauli::X, Pauli::Z), (SignedPauli{Pauli::Y, 3}));  // XZ = -iY
  EXPECT_EQ(pauli_product(Pauli::I, Pauli::Z), (SignedPauli{Pauli::Z, 0}));
  EXPECT_EQ(pauli_product(Pauli::X, Pauli::X), (SignedPauli{Pauli::I, 0}));
  EXPECT_EQ(pauli_product(Pauli::X, Pauli::Y), (SignedPauli{Pauli::Z, 1}));
}

TEST(PauliProduct, AgreesWithMatrixMultiplication) {
  for (Pauli a : kAllPaulis)
    for (Pauli b : kAllPaulis) {
      const CMatrix lhs = pauli_matrix(a) * pauli_matrix(b);
      const CMatrix rhs = signed_pauli_matrix(pauli_product(a, b));
      EXPECT_LT(max_abs_diff(lhs, rhs), 1e-15) << name_of(a) << name_of(b);
    }
}

TEST(PauliProduct, YEqualsIXZ) {
  const CMatrix ixz = Complex(0, 1) * (pauli_matrix(Pauli::X) * pauli_matrix(Pauli::Z));
  EXPECT_LT(max_abs_diff(ixz, pauli_matrix(Pauli::Y)), 1e-15);
}

TEST(PauliProduct, AssociativeOnAllTriples) {
  for (Pauli a : kAllPaulis)
    for (Pauli b : kAllPaulis)
      for (Pauli c : kAllPaulis) {
        const SignedPauli sa{a, 0}, sb{b, 0}, sc{c, 0};
        const SignedPauli left = (sa * sb) * sc;
        const SignedPauli right = sa * (sb * sc);
        EXPECT_EQ(left, right);
        const CMatrix direct = pauli_matrix(a) * pauli_matrix(b) * pauli_matrix(c);
        EXPECT_LT(max_abs_diff(direct, signed_pauli_matrix(left)), 1e-15);
      }
}

TEST(Anticommutes, Examples) {
  EXPECT_TRUE(anticommutes(Pauli::X, Pauli::Z));
  EXPECT_TRUE(anticommutes(Pauli::X, Pauli::Y));
  EXPECT_FALSE(anticommutes(Pauli::X, Pauli::I));
  EXPECT_FALSE(anticommutes(Pauli::Z, Pauli::Z));
}

TEST(Anticommutes, MatchesPhaseDifferenceOfTwo) {
  for (Pauli a : kAllPaulis)
    for (Pauli b : kAllPaulis) {
      const int ab = pauli_product(a, b).phase;
      const int ba = pauli_product(b, a).phase;
      EXPECT_EQ(anticommutes(a, b), (ab - ba + 4) % 4 == 2) << name_of(a) << name_of(b);
      const CMatrix commutator_sum =
          pauli_matrix(a) * pauli_matrix(b) + pauli_matrix(b) * pauli_matrix(a);
      EXPECT_EQ(anticommutes(a, b), max_abs_diff(commutator_sum, CMatrix(2)) < 1e-15);
    }
}

TEST(SignedPauli, ConjugationIgnoresPhase) {
  std::mt19937_64 rng(11);
  const DensityMatrix rho = testing::random_density_matrix(1, rng);
  for (Pauli p : kAllPaulis)
    for (int k = 0; k < 4; ++k) {
      const CMatrix plain = conjugate(pauli_matrix(p), rho.matrix());
      const CMatrix phased = conjugate(signed_pauli_matrix({p, k}), rho.matrix());
      EXPECT_LT(max_abs_diff(plain, phased), 1e-15);
    }
}

TEST(PauliIndex, RejectsOutOfRange) {
  EXPECT_EQ(pauli_from_index(2), Pauli::Y);
  EXPECT_THROW(pauli_from_index(4), std::out_of_range);
  EXPECT_THROW(pauli_from_index(-1), std::out_of_range);
}

}  // namespace
}  // namespace qswitch
