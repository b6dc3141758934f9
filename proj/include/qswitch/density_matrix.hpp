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

#include "qswitch/matrix.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

/// Hermitian, unit-trace, positive semidefinite matrix on 1 to 3 qubits.
/// Construction validates; every instance satisfies the invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) { validate(); }

  /// |0...0><0...0| on `num_qubits` qubits.
  static DensityMatrix ground(std::size_t num_qubits) {
    CMatrix m(std::size_t{1} << num_qubits);
    m(0, 0) = 1.0;
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(std::size_t num_qubits) {
    const std::size_t d = std::size_t{1} << num_qubits;
    return DensityMatrix(CMatrix::identity(d) * Complex(1.0 / static_cast<double>(d)));
  }

  const CMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  std::size_t num_qubits() const {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < m_.dim()) ++n;
    return n;
  }

 private:
  void validate() const {
    const std::size_t d = m_.dim();
    if (d != 2 && d != 4 && d != 8) {
      throw std::invalid_argument("DensityMatrix: dimension must be 2, 4 or 8, got " +
                                  std::to_string(d));
    }
    if (max_abs_diff(m_, m_.adjoint()) > kNormTolerance) {
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - 1.0) > kNormTolerance) {
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (hermitian_eigenvalues(m_).front() < kPsdFloor) {
      throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
  }

  CMatrix m_;
};

}  // namespace qswitch
