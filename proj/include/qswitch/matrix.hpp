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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qswitch {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for a handful of qubits;
/// nothing here is tuned for large dimensions.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMatrix(std::size_t dim, std::initializer_list<Complex> values)
      : dim_(dim), data_(values) {
    if (data_.size() != dim * dim) {
      throw std::invalid_argument("CMatrix: initializer size mismatch");
    }
  }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// |v><v| for a state vector v.
  static CMatrix outer(std::span<const Complex> v) {
    CMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  CMatrix adjoint() const {
    CMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    CMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  /// Largest entrywise modulus of (a - b).
  friend double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    a.check_same(b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      d = std::max(d, std::abs(a.data_[i] - b.data_[i]));
    return d;
  }

 private:
  void check_same(const CMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product a ⊗ b.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  CMatrix k(n * m);
  for (std::size_t ar = 0; ar < n; ++ar)
    for (std::size_t ac = 0; ac < n; ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < m; ++br)
        for (std::size_t bc = 0; bc < m; ++bc) k(ar * m + br, ac * m + bc) = s * b(br, bc);
    }
  return k;
}

/// Places a single-qubit operator on qubit `target` of an n-qubit register,
/// identity elsewhere. Qubit 0 is the most significant tensor factor.
inline CMatrix embed_single(const CMatrix& op, std::size_t target, std::size_t num_qubits) {
  if (op.dim() != 2) throw std::invalid_argument("embed_single: operator must be 2x2");
  if (target >= num_qubits) throw std::invalid_argument("embed_single: target out of range");
  CMatrix full = target == 0 ? op : CMatrix::identity(2);
  for (std::size_t q = 1; q < num_qubits; ++q)
    full = kron(full, q == target ? op : CMatrix::identity(2));
  return full;
}

/// U ρ U†.
inline CMatrix conjugate(const CMatrix& u, const CMatrix& rho) { return u * rho * u.adjoint(); }

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The n×n Hermitian H = A + iB is mapped to the real symmetric 2n×2n block
/// matrix [[A, -B], [B, A]], whose spectrum is that of H with every eigenvalue
/// doubled. Cyclic Jacobi sweeps on the real matrix, then every other value is
/// kept.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  const std::size_t n = h.dim();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrize so tiny anti-Hermitian noise does not bias the result.
      const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
      at(r, c) = v.real();
      at(r + n, c + n) = v.real();
      at(r, c + n) = -v.imag();
      at(r + n, c) = v.imag();
    }

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }

  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
  return eig;
}

}  // namespace qswitch
