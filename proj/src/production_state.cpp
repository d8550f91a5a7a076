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

#include "hyperspin/production_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hyperspin {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kMinDenominator = 0.01;

void check_phi(double phi) {
  if (!std::isfinite(phi) || phi < -kAngleSlack || phi > std::numbers::pi + kAngleSlack) {
    throw DomainError("production angle must lie in [0, pi], got " + std::to_string(phi));
  }
}

// 1 + v cos^2(phi); bounded below by 1 - |v|.
double denominator(const HyperonChannel& ch, double phi) {
  const double c = std::cos(phi);
  const double d = 1.0 + ch.upsilon_psi * c * c;
  if (d <= kMinDenominator) {
    throw DomainError("1 + upsilon cos^2(phi) too close to zero: " + std::to_string(d));
  }
  return d;
}

double transverse_amplitude(const HyperonChannel& ch) {
  return std::sqrt(1.0 - ch.upsilon_psi * ch.upsilon_psi);
}

}  // namespace

HyperonChannel channel_params(ChannelName name) {
  switch (name) {
    case ChannelName::Lambda:
      return {name, 0.475, 0.752};
    case ChannelName::SigmaPlus:
      return {name, -0.508, -0.270};
    case ChannelName::XiMinus:
      return {name, 0.586, 1.213};
    case ChannelName::XiZero:
      return {name, 0.514, 1.168};
  }
  throw UnknownChannel("channel id " + std::to_string(static_cast<int>(name)));
}

ChannelName parse_channel(std::string_view name) {
  for (ChannelName c : kAllChannels) {
    if (channel_slug(c) == name) return c;
  }
  throw UnknownChannel("'" + std::string(name) + "' (expected lambda, sigma+, xi-, xi0)");
}

std::string_view channel_slug(ChannelName name) {
  switch (name) {
    case ChannelName::Lambda:
      return "lambda";
    case ChannelName::SigmaPlus:
      return "sigma+";
    case ChannelName::XiMinus:
      return "xi-";
    case ChannelName::XiZero:
      return "xi0";
  }
  throw UnknownChannel("channel id " + std::to_string(static_cast<int>(name)));
}

HyperonChannel make_channel(ChannelName name, double upsilon_psi, double delta_theta) {
  if (!(upsilon_psi >= -1.0 && upsilon_psi <= 1.0)) {
    throw DomainError("upsilon_psi must lie in [-1, 1]");
  }
  if (!(delta_theta >= -std::numbers::pi && delta_theta <= std::numbers::pi)) {
    throw DomainError("delta_theta must lie in [-pi, pi]");
  }
  return {name, upsilon_psi, delta_theta};
}

PhiMatrix::PhiMatrix(double p_y, double c_xx, double c_yy, double c_zz, double c_xz) {
  m_[0][0] = 1.0;
  m_[0][2] = p_y;
  m_[2][0] = p_y;
  m_[1][1] = c_xx;
  m_[2][2] = c_yy;
  m_[3][3] = c_zz;
  m_[1][3] = c_xz;
  m_[3][1] = c_xz;
}

// ---------------------------------------------------------------------------
// DensityMatrix4

DensityMatrix4::DensityMatrix4(const ComplexMat4& m) : m_(m) {
  const double defect = m_.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    throw InvalidState("not Hermitian, defect " + std::to_string(defect));
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > kHermitianTolerance) {
    throw InvalidState("trace " + std::to_string(tr.real()) + " differs from 1");
  }
}

double DensityMatrix4::off_x_magnitude() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      worst = std::max(worst, std::abs(m_(i, j)));
    }
  }
  return worst;
}

void DensityMatrix4::validate() const {
  const auto ev = eigenvalues();
  if (ev[3] < -kEigenvalueTolerance) {
    throw InvalidState("negative eigenvalue " + std::to_string(ev[3]));
  }
}

// ---------------------------------------------------------------------------
// Production state

double polarization(const HyperonChannel& ch, double phi) {
  check_phi(phi);
  return transverse_amplitude(ch) * std::sin(ch.delta_theta) * std::sin(phi) * std::cos(phi) /
         denominator(ch, phi);
}

PhiMatrix phi_matrix(const HyperonChannel& ch, double phi) {
  check_phi(phi);
  const double d = denominator(ch, phi);
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double v = ch.upsilon_psi;
  const double p_y = transverse_amplitude(ch) * std::sin(ch.delta_theta) * s * c / d;
  const double c_xx = s * s / d;
  const double c_yy = -v * s * s / d;
  const double c_zz = (v + c * c) / d;
  const double c_xz = transverse_amplitude(ch) * std::cos(ch.delta_theta) * s * c / d;
  return PhiMatrix(p_y, c_xx, c_yy, c_zz, c_xz);
}

double xstate_radicand(const HyperonChannel& ch, double phi) {
  const double v = ch.upsilon_psi;
  const double a = 1.0 + v * std::cos(2.0 * phi);
  const double sd = std::sin(ch.delta_theta);
  const double s2 = std::sin(2.0 * phi);
  return a * a - (1.0 - v * v) * sd * sd * s2 * s2;
}

namespace {

double checked_root(const HyperonChannel& ch, double phi) {
  const double r = xstate_radicand(ch, phi);
  if (r < -kDiscriminantTolerance) {
    throw NegativeDiscriminant("radicand " + std::to_string(r) + " at phi " + std::to_string(phi));
  }
  return std::sqrt(std::max(r, 0.0));
}

}  // namespace

XStateParams xstate_params(const HyperonChannel& ch, double phi) {
  check_phi(phi);
  const double d = denominator(ch, phi);
  const double root = checked_root(ch, phi);
  const double v = ch.upsilon_psi;
  const double s = std::sin(phi);
  XStateParams x;
  x.kappa = transverse_amplitude(ch) * std::sin(ch.delta_theta) * s * std::cos(phi) / d;
  x.gamma[0] = (1.0 + v + root) / (2.0 * d);
  x.gamma[1] = (1.0 + v - root) / (2.0 * d);
  x.gamma[2] = -v * s * s / d;
  return x;
}

XStateParams numeric_xstate_params(const HyperonChannel& ch, double phi) {
  const PhiMatrix p = phi_matrix(ch, phi);
  // Single Jacobi rotation zeroes the off-diagonal of [[a, b], [b, c]].
  const double a = p.c_xx();
  const double b = p.c_xz();
  const double c = p.c_zz();
  double e1 = a;
  double e2 = c;
  if (b != 0.0) {
    const double theta = (c - a) / (2.0 * b);
    const double t =
        (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    e1 = a - t * b;
    e2 = c + t * b;
  }
  XStateParams x;
  x.kappa = p.p_y();
  x.gamma[0] = std::max(e1, e2);
  x.gamma[1] = std::min(e1, e2);
  // The y axis becomes the new z axis after the relabeling.
  x.gamma[2] = p.c_yy();
  return x;
}

DensityMatrix4 density_matrix(const HyperonChannel& ch, double phi) {
  check_phi(phi);
  const double d = denominator(ch, phi);
  const double v = ch.upsilon_psi;
  const double s = std::sin(phi);
  const double p_y = polarization(ch, phi);
  const double longitudinal = v * s * s / d;

  const double rho11 = 0.25 * (1.0 + 2.0 * p_y - longitudinal);
  const double rho44 = 0.25 * (1.0 - 2.0 * p_y - longitudinal);
  const double inner = (1.0 + v) / (4.0 * d);
  const double rho14 = checked_root(ch, phi) / (4.0 * d);

  ComplexMat4 m;
  m(0, 0) = rho11;
  m(3, 3) = rho44;
  m(0, 3) = rho14;
  m(3, 0) = rho14;
  m(1, 1) = inner;
  m(2, 2) = inner;
  m(1, 2) = inner;
  m(2, 1) = inner;
  DensityMatrix4 rho(m);
  rho.validate();
  return rho;
}

}  // namespace hyperspin
