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

// Classically correlated pure-dephasing channel driven by random telegraph
// noise.

#include <array>
#include <string_view>

#include "hyperspin/production_state.hpp"

namespace hyperspin {

enum class Regime { Markovian, NonMarkovian, Boundary };

/// Functional form of the memory kernel, with u = 1/(2 tau) and
/// v = sqrt|u^2 - omega^2|.
///
/// Paired: damped oscillator, cos+sin for u < omega and cosh+sinh for
/// u > omega, with coefficient u/v. Satisfies K(0) = 1, K'(0) = 0, |K| <= 1.
///
/// Mixed: cos with sinh (u < omega) and cosh with sin (u > omega),
/// coefficient 1/v. Kept only to quantify how the alternative reading
/// differs; it leaves [-1, 1] and is rejected by flip_probability.
///
/// The regime label follows 4 tau vs 1. The expression switches where v
/// vanishes (2 tau = 1), so for 1/4 < tau < 1/2 a non-Markovian label comes
/// with a monotone kernel.
enum class KernelVariant { Paired, Mixed };

std::string_view regime_slug(Regime r);
std::string_view kernel_variant_slug(KernelVariant v);
KernelVariant parse_kernel_variant(std::string_view name);

/// Below this |4 tau - 1| the regime is labelled Boundary.
inline constexpr double kBoundaryWidth = 1e-9;
/// v below this switches to the v -> 0 limit to avoid 0/0.
inline constexpr double kSmallV = 1e-6;

class ChannelConfig {
 public:
  /// Coin amplitude of the telegraph signal; frozen at 1.
  static constexpr double kOmega = 1.0;

  ChannelConfig(double mu, double tau, KernelVariant variant = KernelVariant::Paired);

  double mu() const { return mu_; }
  double tau() const { return tau_; }
  KernelVariant variant() const { return variant_; }
  Regime regime() const;

  double u() const { return 1.0 / (2.0 * tau_); }
  double v() const;

 private:
  double mu_;
  double tau_;
  KernelVariant variant_;
};

struct KernelValue {
  double k = 1.0;
  double u = 0.0;
  double v = 0.0;
};

/// Joint Pauli probabilities p_ij, i, j indexing {0, x, y, z}.
class JointProbabilities {
 public:
  explicit JointProbabilities(const std::array<std::array<double, 4>, 4>& p);

  double operator()(std::size_t i, std::size_t j) const { return p_[i][j]; }
  double total() const;

 private:
  std::array<std::array<double, 4>, 4> p_{};
};

/// Throws NegativeTime for t < 0.
KernelValue memory_kernel(double t, const ChannelConfig& cfg);

namespace detail {
/// The kernel's closed-form expression without the t >= 0 precondition;
/// used for symmetric finite differences at t = 0.
double kernel_expression(double t, const ChannelConfig& cfg);
}  // namespace detail

/// p = (1 - K) / 2. Throws InvalidKernel when |K| > 1 + 1e-12.
double flip_probability(const KernelValue& k);

/// p_ij = (1 - mu) p_i p_j + mu p_i delta_ij for (p_0, p_x, p_y, p_z) = (1 - p, 0, 0, p).
JointProbabilities joint_probabilities(double p, double mu);

/// sum_ij L_ij rho L_ij^dagger with L_ij = sqrt(p_ij) sigma_i (x) sigma_j.
DensityMatrix4 kraus_apply(const DensityMatrix4& rho, const JointProbabilities& jp);

/// Off-diagonal survival factor K^2 + (1 - K^2) mu. Throws InvalidKernel
/// when |K| > 1.
double eta(double t, const ChannelConfig& cfg);
double eta_from_kernel(double k, double mu);

/// Scales the anti-diagonal of an X-state by `eta_value`. Throws NotXState,
/// or DomainError for eta outside [0, 1].
DensityMatrix4 apply_eta(const DensityMatrix4& rho0, double eta_value);

/// apply_eta(rho0, eta(t, cfg)).
DensityMatrix4 evolve(const DensityMatrix4& rho0, double t, const ChannelConfig& cfg);

}  // namespace hyperspin
