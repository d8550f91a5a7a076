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

// Spin state of a hyperon-antihyperon pair from e+e- -> J/psi -> Y Ybar.

#include <array>
#include <string>
#include <string_view>

#include "hyperspin/linalg.hpp"

namespace hyperspin {

enum class ChannelName { Lambda, SigmaPlus, XiMinus, XiZero };

inline constexpr std::array<ChannelName, 4> kAllChannels = {
    ChannelName::Lambda, ChannelName::SigmaPlus, ChannelName::XiMinus, ChannelName::XiZero};

/// Production parameters of one decay channel. `upsilon_psi` is the
/// charmonium decay parameter in [-1, 1]; `delta_theta` is the relative
/// form-factor phase in radians, [-pi, pi].
struct HyperonChannel {
  ChannelName name = ChannelName::Lambda;
  double upsilon_psi = 0.0;
  double delta_theta = 0.0;
};

/// Registered central values. Throws UnknownChannel for values outside the enum.
HyperonChannel channel_params(ChannelName name);

/// Accepts the lower-case names lambda, sigma+, xi-, xi0.
ChannelName parse_channel(std::string_view name);
std::string_view channel_slug(ChannelName name);

/// Builds a channel from raw values after checking their domains.
HyperonChannel make_channel(ChannelName name, double upsilon_psi, double delta_theta);

/// Polarization/correlation matrix Phi_{alpha beta} in the helicity frame.
/// Index 0 is the identity slot, 1..3 are x, y, z.
class PhiMatrix {
 public:
  PhiMatrix(double p_y, double c_xx, double c_yy, double c_zz, double c_xz);

  double operator()(std::size_t alpha, std::size_t beta) const { return m_[alpha][beta]; }

  double p_y() const { return m_[0][2]; }
  double c_xx() const { return m_[1][1]; }
  double c_yy() const { return m_[2][2]; }
  double c_zz() const { return m_[3][3]; }
  double c_xz() const { return m_[1][3]; }

 private:
  std::array<std::array<double, 4>, 4> m_{};
};

/// Diagonalized representation: kappa on the sigma_z marginals and the
/// three correlation eigenvalues, gamma[0] >= gamma[1].
struct XStateParams {
  double kappa = 0.0;
  std::array<double, 3> gamma{};
};

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Construction
/// checks hermiticity and trace; positivity is checked by validate() since
/// it requires a spectrum.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const ComplexMat4& m);

  const ComplexMat4& matrix() const { return m_; }
  double entry(std::size_t i, std::size_t j) const { return m_(i, j).real(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Largest modulus over the eight entries outside the diagonal and anti-diagonal.
  double off_x_magnitude() const;
  bool is_x_state(double tol = 1e-12) const { return off_x_magnitude() <= tol; }

  std::array<double, 4> eigenvalues() const { return hermitian_eigenvalues(m_); }

  /// Full check including positivity; throws InvalidState.
  void validate() const;

 private:
  ComplexMat4 m_;
};

inline constexpr double kDiscriminantTolerance = 1e-12;

double polarization(const HyperonChannel& ch, double phi);
PhiMatrix phi_matrix(const HyperonChannel& ch, double phi);

/// Closed form; throws NegativeDiscriminant if the radicand is below
/// -kDiscriminantTolerance.
XStateParams xstate_params(const HyperonChannel& ch, double phi);

/// Same contract as xstate_params, obtained by numerically rotating the
/// x-z correlation block of Phi to its principal axes.
XStateParams numeric_xstate_params(const HyperonChannel& ch, double phi);

/// sigma_z-basis X-state. Entries (1,1),(2,2),(2,3),(3,3) share one value.
DensityMatrix4 density_matrix(const HyperonChannel& ch, double phi);

/// Radicand (1 + v cos 2phi)^2 - (1 - v^2) sin^2(dtheta) sin^2(2phi).
double xstate_radicand(const HyperonChannel& ch, double phi);

}  // namespace hyperspin
