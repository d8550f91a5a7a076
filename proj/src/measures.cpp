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

#include "hyperspin/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hyperspin {

namespace {

constexpr double kInvSqrt3 = 1.0 / std::numbers::sqrt3;
constexpr double kSteeringScale = 8.0 / std::numbers::sqrt3;
constexpr double kGqdDegenerate = 1e-14;

// Diagonal and anti-diagonal moduli of an X-state.
struct XEntries {
  double r11, r22, r33, r44;
  double r14, r23;
};

XEntries x_entries(const DensityMatrix4& rho) {
  if (!rho.is_x_state()) {
    throw NotXState("off-X magnitude " + std::to_string(rho.off_x_magnitude()));
  }
  return {rho.entry(0, 0), rho.entry(1, 1), rho.entry(2, 2), rho.entry(3, 3),
          std::abs(rho(0, 3)), std::abs(rho(1, 2))};
}

double nonneg_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

std::string_view steering_class_slug(SteeringClass c) {
  switch (c) {
    case SteeringClass::NoWay:
      return "no-way";
    case SteeringClass::OneWayAB:
      return "one-way-ab";
    case SteeringClass::OneWayBA:
      return "one-way-ba";
    case SteeringClass::TwoWay:
      return "two-way";
  }
  return "unknown";
}

ComplexMat4 steering_operator(const DensityMatrix4& rho, SteeringDirection direction) {
  const ComplexMat2 half_identity = pauli(0) * Complex{0.5, 0.0};
  const ComplexMat4 mixed =
      direction == SteeringDirection::AliceToBob
          ? kron(half_identity, partial_trace(rho.matrix(), Subsystem::Second))
          : kron(partial_trace(rho.matrix(), Subsystem::First), half_identity);
  return rho.matrix() * Complex{kInvSqrt3, 0.0} + mixed * Complex{1.0 - kInvSqrt3, 0.0};
}

SteeringFunctions f_functions(const DensityMatrix4& rho) {
  const XEntries x = x_entries(rho);
  const double minus = (2.0 - std::numbers::sqrt3) / 2.0;
  const double plus = (2.0 + std::numbers::sqrt3) / 2.0;
  const double cross = 0.25 * (x.r11 + x.r44) * (x.r22 + x.r33);
  return {
      minus * x.r11 * x.r44 + plus * x.r22 * x.r33 + cross,
      0.25 * (x.r11 - x.r44) * (x.r22 - x.r33),
      plus * x.r11 * x.r44 + minus * x.r22 * x.r33 + cross,
  };
}

SteeringResult steering(const DensityMatrix4& rho) {
  const XEntries x = x_entries(rho);
  const SteeringFunctions f = f_functions(rho);
  const double outer = x.r14 * x.r14;
  const double inner = x.r23 * x.r23;

  auto value = [&](double sign) {
    const double best = std::max(outer - f.a + sign * f.b, inner - f.c + sign * f.b);
    return std::max(0.0, kSteeringScale * best);
  };

  SteeringResult r;
  r.s_ab = value(-1.0);
  r.s_ba = value(+1.0);
  r.delta_s = std::abs(r.s_ab - r.s_ba);
  const bool ab = r.s_ab > 0.0;
  const bool ba = r.s_ba > 0.0;
  if (ab && ba) {
    r.steering_class = SteeringClass::TwoWay;
  } else if (ab) {
    r.steering_class = SteeringClass::OneWayAB;
  } else if (ba) {
    r.steering_class = SteeringClass::OneWayBA;
  } else {
    r.steering_class = SteeringClass::NoWay;
  }
  return r;
}

double concurrence(const DensityMatrix4& rho) {
  const XEntries x = x_entries(rho);
  const double inner_branch = x.r23 - nonneg_sqrt(x.r11 * x.r44);
  const double outer_branch = x.r14 - nonneg_sqrt(x.r22 * x.r33);
  return std::clamp(2.0 * std::max({inner_branch, outer_branch, 0.0}), 0.0, 1.0);
}

double concurrence_closed(const HyperonChannel& ch, double phi, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must lie in [0, 1]");
  return std::abs(eta * xstate_params(ch, phi).gamma[1]);
}

double binary_entropy(double x) {
  auto term = [](double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); };
  return term(x) + term(1.0 - x);
}

double eof(double c) {
  constexpr double kSlack = 1e-12;
  if (!(c >= -kSlack && c <= 1.0 + kSlack)) {
    throw DomainError("concurrence " + std::to_string(c) + " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  const double x = std::clamp(0.5 * (1.0 + std::sqrt(1.0 - c * c)), 0.0, 1.0);
  return binary_entropy(x);
}

FanoBloch fano_bloch(const DensityMatrix4& rho) {
  const XEntries x = x_entries(rho);
  // Re parts carry the sign; for this family the anti-diagonal is real.
  const double rho14 = rho(0, 3).real();
  const double rho23 = rho(1, 2).real();
  FanoBloch r;
  r.r11 = 2.0 * (rho23 + rho14);
  r.r22 = 2.0 * (rho23 - rho14);
  r.r33 = 1.0 - 2.0 * (x.r22 + x.r33);
  r.r03 = x.r11 - x.r22 + x.r33 - x.r44;
  r.r30 = x.r11 + x.r22 - x.r33 - x.r44;
  return r;
}

double gqd(const DensityMatrix4& rho) {
  const FanoBloch r = fano_bloch(rho);
  // Local z rotations make both anti-diagonal entries real and non-negative
  // without changing the discord; in that frame |R11| >= |R22|, which the
  // closed form assumes.
  const XEntries x = x_entries(rho);
  const double r11 = 4.0 * (x.r23 + x.r14) * (x.r23 + x.r14);
  const double r22 = 4.0 * (x.r23 - x.r14) * (x.r23 - x.r14);
  const double r33 = r.r33 * r.r33;
  const double r30 = r.r30 * r.r30;
  const double rmax = std::max(r22 + r30, r33);
  const double rmin = std::min(r11, r33);
  const double den = rmax - rmin + r11 - r22;
  if (den < kGqdDegenerate) return 0.0;
  const double num = r11 * rmax - r22 * rmin;
  return 0.5 * nonneg_sqrt(num / den);
}

double coherence_l1(const DensityMatrix4& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

MeasureRecord measure_all(const DensityMatrix4& rho, double eta, double kernel) {
  MeasureRecord m;
  m.steering = steering(rho);
  m.concurrence = concurrence(rho);
  m.eof = eof(m.concurrence);
  m.gqd = gqd(rho);
  m.coherence_l1 = coherence_l1(rho);
  m.eta = eta;
  m.kernel = kernel;
  return m;
}

}  // namespace hyperspin
