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
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "qswitch/matrix.hpp"

namespace qswitch {

/// Single-qubit Pauli label: σ0 = I, σ1 = X, σ2 = Y, σ3 = Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

constexpr int index_of(Pauli p) { return static_cast<int>(p); }

inline Pauli pauli_from_index(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("Pauli index must be in {0,1,2,3}");
  return static_cast<Pauli>(index);
}

constexpr std::string_view name_of(Pauli p) {
  constexpr std::array<std::string_view, 4> names = {"I", "X", "Y", "Z"};
  return names[index_of(p)];
}

/// i^phase · σ_index.
struct SignedPauli {
  Pauli index = Pauli::I;
  int phase = 0;  // exponent of i, in {0,1,2,3}

  friend constexpr bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// σ_a σ_b = i^k σ_c. Phases follow the convention XY = iZ, YZ = iX, ZX = iY
/// (so XZ = -iY, equivalently Y = iXZ).
constexpr SignedPauli pauli_product(Pauli a, Pauli b) {
  const int ia = index_of(a), ib = index_of(b);
  // With the labelling I=0, X=1, Y=2, Z=3 the product label is the XOR.
  const auto c = static_cast<Pauli>(ia ^ ib);
  if (ia == 0 || ib == 0 || ia == ib) return {c, 0};
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

constexpr SignedPauli operator*(SignedPauli a, SignedPauli b) {
  const SignedPauli p = pauli_product(a.index, b.index);
  return {p.index, (a.phase + b.phase + p.phase) % 4};
}

/// True iff σ_a σ_b = -σ_b σ_a.
constexpr bool anticommutes(Pauli a, Pauli b) {
  return a != b && a != Pauli::I && b != Pauli::I;
}

inline CMatrix pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  switch (p) {
    case Pauli::I: return CMatrix(2, {1.0, 0.0, 0.0, 1.0});
    case Pauli::X: return CMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case Pauli::Y: return CMatrix(2, {0.0, -1.0i, 1.0i, 0.0});
    case Pauli::Z: return CMatrix(2, {1.0, 0.0, 0.0, -1.0});
  }
  throw std::logic_error("unreachable Pauli label");
}

inline Complex i_power(int k) {
  constexpr std::array<Complex, 4> powers = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                             Complex{0, -1}};
  return powers[((k % 4) + 4) % 4];
}

inline CMatrix signed_pauli_matrix(SignedPauli p) { return i_power(p.phase) * pauli_matrix(p.index); }

}  // namespace qswitch
