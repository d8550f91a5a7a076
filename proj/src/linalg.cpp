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

#include "hyperspin/linalg.hpp"

#include <algorithm>
#include <functional>

namespace hyperspin {

namespace {

using Real8 = std::array<std::array<double, 8>, 8>;

const std::array<ComplexMat2, 4>& pauli_table() {
  static const std::array<ComplexMat2, 4> table = {
      ComplexMat2{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMat2{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMat2{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
      ComplexMat2{{1.0, 0.0}, {0.0, -1.0}},
  };
  return table;
}

// Cyclic Jacobi on a real symmetric matrix; returns the diagonal after
// convergence.
std::array<double, 8> jacobi_eigenvalues(Real8 a) {
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double scale = 0.0;
    for (std::size_t p = 0; p < 8; ++p) {
      scale += a[p][p] * a[p][p];
      for (std::size_t q = p + 1; q < 8; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-32 * std::max(scale, 1e-300)) break;

    for (std::size_t p = 0; p < 7; ++p) {
      for (std::size_t q = p + 1; q < 8; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < 8; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 8; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, 8> d{};
  for (std::size_t i = 0; i < 8; ++i) d[i] = a[i][i];
  return d;
}

}  // namespace

const ComplexMat2& pauli(PauliIndex index) {
  return pauli_table()[static_cast<std::size_t>(index.value())];
}

ComplexMat4 kron(const ComplexMat2& a, const ComplexMat2& b) {
  ComplexMat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

ComplexMat4 pauli_product(PauliIndex i, PauliIndex j) { return kron(pauli(i), pauli(j)); }

ComplexMat2 partial_trace(const ComplexMat4& rho, Subsystem keep) {
  ComplexMat2 r;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      Complex sum{};
      for (std::size_t k = 0; k < 2; ++k) {
        sum += keep == Subsystem::First ? rho(2 * a + k, 2 * b + k) : rho(2 * k + a, 2 * k + b);
      }
      r(a, b) = sum;
    }
  }
  return r;
}

std::array<double, 4> hermitian_eigenvalues(const ComplexMat4& m) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    throw NotHermitian("max |m - m^dagger| = " + std::to_string(defect));
  }
  // H = A + iB maps to the real symmetric [[A, -B], [B, A]], whose spectrum
  // is that of H with every eigenvalue doubled in multiplicity.
  Real8 embed{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      embed[i][j] = h.real();
      embed[i + 4][j + 4] = h.real();
      embed[i][j + 4] = -h.imag();
      embed[i + 4][j] = h.imag();
    }
  }
  auto doubled = jacobi_eigenvalues(embed);
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

double expectation(const ComplexMat4& op, const ComplexMat4& rho) {
  return (op * rho).trace().real();
}

}  // namespace hyperspin
