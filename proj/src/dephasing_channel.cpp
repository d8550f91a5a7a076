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

#include "hyperspin/dephasing_channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperspin {

namespace {

constexpr double kProbabilitySlack = 1e-12;

const std::array<std::array<ComplexMat4, 4>, 4>& kraus_basis() {
  static const auto table = [] {
    std::array<std::array<ComplexMat4, 4>, 4> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i][j] = pauli_product(PauliIndex{i}, PauliIndex{j});
    return t;
  }();
  return table;
}

// e^{-ut} cosh(vt) and e^{-ut} sinh(vt) without forming cosh(vt) for large vt.
double damped_cosh(double u, double v, double t) {
  return 0.5 * (std::exp(-(u - v) * t) + std::exp(-(u + v) * t));
}
double damped_sinh(double u, double v, double t) {
  return 0.5 * (std::exp(-(u - v) * t) - std::exp(-(u + v) * t));
}

}  // namespace

std::string_view regime_slug(Regime r) {
  switch (r) {
    case Regime::Markovian:
      return "markovian";
    case Regime::NonMarkovian:
      return "non-markovian";
    case Regime::Boundary:
      return "boundary";
  }
  return "unknown";
}

std::string_view kernel_variant_slug(KernelVariant v) {
  return v == KernelVariant::Paired ? "paired" : "mixed";
}

KernelVariant parse_kernel_variant(std::string_view name) {
  if (name == "paired") return KernelVariant::Paired;
  if (name == "mixed") return KernelVariant::Mixed;
  throw DomainError("unknown kernel variant '" + std::string(name) + "'");
}

ChannelConfig::ChannelConfig(double mu, double tau, KernelVariant variant)
    : mu_(mu), tau_(tau), variant_(variant) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu must lie in [0, 1], got " + std::to_string(mu));
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("tau must be positive and finite, got " + std::to_string(tau));
  }
}

Regime ChannelConfig::regime() const {
  const double x = 4.0 * tau_ * kOmega;
  if (std::abs(x - 1.0) < kBoundaryWidth) return Regime::Boundary;
  return x > 1.0 ? Regime::NonMarkovian : Regime::Markovian;
}

double ChannelConfig::v() const {
  const double uu = u();
  return std::sqrt(std::abs(uu * uu - kOmega * kOmega));
}

JointProbabilities::JointProbabilities(const std::array<std::array<double, 4>, 4>& p) : p_(p) {
  for (const auto& row : p_) {
    for (double x : row) {
      if (!(x >= 0.0)) throw DomainError("joint probability must be non-negative");
    }
  }
  if (std::abs(total() - 1.0) > kProbabilitySlack) {
    throw DomainError("joint probabilities sum to " + std::to_string(total()));
  }
}

double JointProbabilities::total() const {
  double s = 0.0;
  for (const auto& row : p_)
    for (double x : row) s += x;
  return s;
}

namespace detail {

double kernel_expression(double t, const ChannelConfig& cfg) {
  const double u = cfg.u();
  const double v = cfg.v();
  const bool mixed = cfg.variant() == KernelVariant::Mixed;

  if (v < kSmallV) {
    // v -> 0 limit of either form.
    return std::exp(-u * t) * (1.0 + (mixed ? 1.0 : u) * t);
  }

  // The expression changes character where v does (u = omega, 2 tau = 1),
  // not at the 4 tau = 1 regime label; this keeps K continuous in tau.
  const double coeff = mixed ? 1.0 / v : u / v;
  const double envelope = std::exp(-u * t);
  if (u < ChannelConfig::kOmega) {
    return mixed ? envelope * std::cos(v * t) + coeff * damped_sinh(u, v, t)
                 : envelope * (std::cos(v * t) + coeff * std::sin(v * t));
  }
  return mixed ? damped_cosh(u, v, t) + coeff * envelope * std::sin(v * t)
               : damped_cosh(u, v, t) + coeff * damped_sinh(u, v, t);
}

}  // namespace detail

KernelValue memory_kernel(double t, const ChannelConfig& cfg) {
  if (!(t >= 0.0)) throw NegativeTime("t = " + std::to_string(t));
  return {detail::kernel_expression(t, cfg), cfg.u(), cfg.v()};
}

double flip_probability(const KernelValue& k) {
  if (!(std::abs(k.k) <= 1.0 + kProbabilitySlack)) {
    throw InvalidKernel("|K| = " + std::to_string(std::abs(k.k)) + " exceeds 1");
  }
  return std::clamp(0.5 * (1.0 - k.k), 0.0, 1.0);
}

JointProbabilities joint_probabilities(double p, double mu) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("flip probability outside [0, 1]");
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("mu outside [0, 1]");
  const std::array<double, 4> single = {1.0 - p, 0.0, 0.0, p};
  std::array<std::array<double, 4>, 4> joint{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      joint[i][j] = (1.0 - mu) * single[i] * single[j] + (i == j ? mu * single[i] : 0.0);
    }
  }
  return JointProbabilities(joint);
}

DensityMatrix4 kraus_apply(const DensityMatrix4& rho, const JointProbabilities& jp) {
  const auto& basis = kraus_basis();
  ComplexMat4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double pij = jp(i, j);
      if (pij == 0.0) continue;
      const ComplexMat4& op = basis[i][j];
      out += (op * rho.matrix() * op.adjoint()) * Complex{pij, 0.0};
    }
  }
  return DensityMatrix4(out);
}

double eta_from_kernel(double k, double mu) {
  const double k2 = k * k;
  return k2 + (1.0 - k2) * mu;
}

double eta(double t, const ChannelConfig& cfg) {
  const KernelValue k = memory_kernel(t, cfg);
  flip_probability(k);  // same |K| <= 1 gate as the Kraus route
  return eta_from_kernel(k.k, cfg.mu());
}

DensityMatrix4 apply_eta(const DensityMatrix4& rho0, double eta_value) {
  const double off = rho0.off_x_magnitude();
  if (off > 1e-12) throw NotXState("off-X magnitude " + std::to_string(off));
  if (!(eta_value >= -kProbabilitySlack && eta_value <= 1.0 + kProbabilitySlack)) {
    throw DomainError("eta " + std::to_string(eta_value) + " outside [0, 1]");
  }
  ComplexMat4 m = rho0.matrix();
  m(0, 3) *= eta_value;
  m(3, 0) *= eta_value;
  m(1, 2) *= eta_value;
  m(2, 1) *= eta_value;
  return DensityMatrix4(m);
}

DensityMatrix4 evolve(const DensityMatrix4& rho0, double t, const ChannelConfig& cfg) {
  return apply_eta(rho0, eta(t, cfg));
}

}  // namespace hyperspin
