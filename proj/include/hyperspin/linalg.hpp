// Copyright 2026 The hyperspin Authors
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

// Fixed-size dense complex matrices for one and two qubits.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "hyperspin/errors.hpp"

namespace hyperspin {

using Complex = std::complex<double>;

/// Square complex matrix of dimension N, row-major. Entries are checked for
/// finiteness on every construction path that takes external data.
template <std::size_t N>
class ComplexMatrix {
 public:
  static constexpr std::size_t kDim = N;

  ComplexMatrix() { entries_.fill(Complex{0.0, 0.0}); }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N) {
      throw DomainError("expected " + std::to_string(N) + " rows");
    }
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) {
        throw DomainError("expected " + std::to_string(N) + " columns");
      }
      std::size_t j = 0;
      for (const auto& value : row) entries_[i * N + j++] = value;
      ++i;
    }
    check_finite();
  }

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::array<double, N>& d) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    m.check_finite();
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * N + j];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = std::conj(entries_[k]);
    return r;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest absolute entry of (*this - o).
  double max_abs_diff(const ComplexMatrix& o) const {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k)
      m = std::max(m, std::abs(entries_[k] - o.entries_[k]));
    return m;
  }

  /// Largest absolute entry of (*this - this^dagger).
  double hermiticity_defect() const { return max_abs_diff(adjoint()); }

  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  const std::array<Complex, N * N>& entries() const { return entries_; }

 private:
  void check_finite() const {
    for (const auto& e : entries_) {
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
        throw NonFiniteEntry("matrix entry is NaN or infinite");
      }
    }
  }

  std::array<Complex, N * N> entries_{};
};

using ComplexMat2 = ComplexMatrix<2>;
using ComplexMat4 = ComplexMatrix<4>;

/// Index into {sigma_0, sigma_x, sigma_y, sigma_z}.
class PauliIndex {
 public:
  constexpr explicit PauliIndex(int index) : index_(index) {
    if (index < 0 || index > 3) throw DomainError("Pauli index must lie in 0..3");
  }
  constexpr int value() const { return index_; }
  friend constexpr bool operator==(PauliIndex, PauliIndex) = default;

 private:
  int index_;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kEigenvalueTolerance = 1e-9;

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z in the standard basis.
const ComplexMat2& pauli(PauliIndex index);
inline const ComplexMat2& pauli(int index) { return pauli(PauliIndex{index}); }

ComplexMat4 kron(const ComplexMat2& a, const ComplexMat2& b);

/// sigma_i (x) sigma_j.
ComplexMat4 pauli_product(PauliIndex i, PauliIndex j);

enum class Subsystem { First, Second };

/// Reduced state on `keep`; the other qubit is traced out.
ComplexMat2 partial_trace(const ComplexMat4& rho, Subsystem keep);

/// Eigenvalues of a Hermitian 4x4 matrix in descending order. Throws
/// NotHermitian when max |m - m^dagger| exceeds kHermitianTolerance.
std::array<double, 4> hermitian_eigenvalues(const ComplexMat4& m);

/// Real expectation value tr(op * rho).
double expectation(const ComplexMat4& op, const ComplexMat4& rho);

}  // namespace hyperspin
