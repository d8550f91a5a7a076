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

#include "hyperspin/self_check.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "hyperspin/measures.hpp"

namespace hyperspin {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::string name) { report_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++report_.checks;
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = what();
  }

  // Runs `body`; an exception counts as one failed check.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::vector<double> uniform(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

std::string at(ChannelName c, double phi) {
  std::ostringstream os;
  os << channel_slug(c) << " phi=" << phi;
  return os.str();
}

SuiteReport state_validity() {
  Suite s("state-validity");
  for (ChannelName name : kAllChannels) {
    const HyperonChannel ch = channel_params(name);
    for (double phi : uniform(0.0, kPi, 721)) {
      s.guarded([&] {
        const DensityMatrix4 rho = density_matrix(ch, phi);
        const auto ev = rho.eigenvalues();
        s.expect(rho.matrix().is_hermitian(kHermitianTolerance), [&] { return at(name, phi); });
        s.expect(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-10,
                 [&] { return "trace " + at(name, phi); });
        s.expect(ev[3] >= -kEigenvalueTolerance, [&] { return "psd " + at(name, phi); });
        s.expect(std::abs(ev[2]) < kEigenvalueTolerance && std::abs(ev[3]) < kEigenvalueTolerance,
                 [&] { return "rank 2 " + at(name, phi); });
        s.expect(rho.is_x_state(), [&] { return "x shape " + at(name, phi); });
      });
    }
  }
  return s.take();
}

SuiteReport xstate_oracle() {
  Suite s("xstate-oracle");
  for (ChannelName name : kAllChannels) {
    const HyperonChannel ch = channel_params(name);
    for (double phi : uniform(0.0, kPi, 721)) {
      s.guarded([&] {
        const XStateParams a = xstate_params(ch, phi);
        const XStateParams b = numeric_xstate_params(ch, phi);
        double worst = std::abs(a.kappa - b.kappa);
        for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a.gamma[i] - b.gamma[i]));
        s.expect(worst <= 1e-10, [&] { return at(name, phi) + " deviation " + std::to_string(worst); });
      });
    }
  }
  return s.take();
}

SuiteReport kernel_contract(KernelVariant variant) {
  Suite s("kernel-contract");
  const std::vector<double> taus = {0.05, 0.1, 0.25 - 1e-9, 0.25, 0.25 + 1e-9, 1.0, 5.0};
  const std::vector<double> times = uniform(0.0, 50.0, 5001);
  for (double tau : taus) {
    s.guarded([&] {
      const ChannelConfig cfg(0.0, tau, variant);
      const auto label = [&] { return "tau=" + std::to_string(tau); };
      s.expect(memory_kernel(0.0, cfg).k == 1.0, [&] { return label() + " K(0) != 1"; });
      constexpr double h = 1e-4;
      const double slope =
          (detail::kernel_expression(h, cfg) - detail::kernel_expression(-h, cfg)) / (2.0 * h);
      s.expect(std::abs(slope) < 1e-6, [&] { return label() + " K'(0) = " + std::to_string(slope); });
      double previous = 2.0;
      int sign_changes = 0;
      double last_sign = 1.0;
      bool monotone = true;
      for (double t : times) {
        const double k = memory_kernel(t, cfg).k;
        s.expect(std::abs(k) <= 1.0 + 1e-12, [&] {
          return label() + " |K| = " + std::to_string(std::abs(k)) + " at t=" + std::to_string(t);
        });
        if (k * last_sign < 0.0) {
          ++sign_changes;
          last_sign = -last_sign;
        }
        if (t > 0.0 && !(k < previous && k >= 0.0)) monotone = false;
        previous = k;
      }
      if (4.0 * tau < 1.0 - kBoundaryWidth) {
        s.expect(monotone, [&] { return label() + " Markovian kernel not monotone"; });
      }
      if (tau == 5.0) {
        s.expect(sign_changes >= 2, [&] { return label() + " fewer than two sign changes"; });
      }
    });
  }
  return s.take();
}

SuiteReport channel_oracle(KernelVariant variant) {
  Suite s("channel-oracle");
  for (ChannelName name : kAllChannels) {
    const HyperonChannel ch = channel_params(name);
    for (double phi : uniform(0.0, kPi, 9)) {
      const DensityMatrix4 rho0 = density_matrix(ch, phi);
      for (double mu : {0.0, 0.3, 0.6, 0.8, 1.0}) {
        for (double tau : {0.1, 5.0}) {
          const ChannelConfig cfg(mu, tau, variant);
          for (double t : uniform(0.0, 10.0, 50)) {
            s.guarded([&] {
              const DensityMatrix4 closed = evolve(rho0, t, cfg);
              const JointProbabilities jp =
                  joint_probabilities(flip_probability(memory_kernel(t, cfg)), mu);
              const DensityMatrix4 kraus = kraus_apply(rho0, jp);
              const double dev = closed.matrix().max_abs_diff(kraus.matrix());
              s.expect(dev < 1e-12, [&] { return at(name, phi) + " deviation " + std::to_string(dev); });
              s.expect(std::abs(jp.total() - 1.0) <= 1e-12, [&] { return std::string("joint sum"); });
              s.expect(std::abs(kraus.matrix().trace().real() - 1.0) <= 1e-12,
                       [&] { return std::string("trace not preserved"); });
            });
          }
        }
      }
    }
  }
  return s.take();
}

SuiteReport measure_identities() {
  Suite s("measure-identities");
  for (ChannelName name : kAllChannels) {
    const HyperonChannel ch = channel_params(name);
    for (double phi : uniform(0.0, kPi, 41)) {
      const DensityMatrix4 rho0 = density_matrix(ch, phi);
      for (double e : uniform(0.0, 1.0, 21)) {
        s.guarded([&] {
          const DensityMatrix4 rho = apply_eta(rho0, e);
          const FanoBloch fb = fano_bloch(rho);
          const auto tr = [&](int a, int b) {
            return expectation(pauli_product(PauliIndex{a}, PauliIndex{b}), rho.matrix());
          };
          const double dev = std::max({std::abs(fb.r11 - tr(1, 1)), std::abs(fb.r22 - tr(2, 2)),
                                       std::abs(fb.r33 - tr(3, 3)), std::abs(fb.r03 - tr(0, 3)),
                                       std::abs(fb.r30 - tr(3, 0))});
          s.expect(dev <= 1e-12, [&] { return at(name, phi) + " Fano-Bloch deviation"; });
          s.expect(std::abs(fb.r03 - fb.r30) <= 1e-12, [&] { return at(name, phi) + " r03 != r30"; });
          const SteeringResult st = steering(rho);
          s.expect(std::abs(st.s_ab - st.s_ba) <= 1e-12, [&] { return at(name, phi) + " asymmetric steering"; });
          const double c = concurrence(rho);
          const double closed = concurrence_closed(ch, phi, e);
          s.expect(c <= closed + 1e-12, [&] { return at(name, phi) + " concurrence above |eta gamma2|"; });
          if (e == 1.0) {
            s.expect(std::abs(c - closed) <= 1e-12, [&] { return at(name, phi) + " concurrence at eta=1"; });
          }
        });
      }
    }
  }
  return s.take();
}

SuiteReport hierarchy(KernelVariant variant) {
  Suite s("hierarchy");
  constexpr double kThreshold = 1e-12;
  for (ChannelName name : kAllChannels) {
    const HyperonChannel ch = channel_params(name);
    for (double phi : uniform(0.0, kPi, 21)) {
      const DensityMatrix4 rho0 = density_matrix(ch, phi);
      for (double mu : {0.0, 0.3, 0.6, 0.8, 1.0}) {
        for (double tau : {0.1, 5.0}) {
          const ChannelConfig cfg(mu, tau, variant);
          for (double t : uniform(0.0, tau < 0.25 ? 5.0 : 50.0, 51)) {
            s.guarded([&] {
              const KernelValue k = memory_kernel(t, cfg);
              flip_probability(k);
              const double e = eta_from_kernel(k.k, mu);
              const MeasureRecord m = measure_all(apply_eta(rho0, e), e, k.k);
              const bool ok = (m.steering.s_ab <= kThreshold || m.concurrence > kThreshold) &&
                              (m.concurrence <= kThreshold || m.gqd > kThreshold) &&
                              (m.gqd <= kThreshold || m.coherence_l1 > kThreshold);
              s.expect(ok, [&] { return at(name, phi) + " hierarchy violated"; });
            });
          }
        }
      }
    }
  }
  return s.take();
}

}  // namespace

bool SelfCheckReport::passed() const { return total_failures() == 0; }

std::size_t SelfCheckReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks;
  return n;
}

std::size_t SelfCheckReport::total_failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures;
  return n;
}

SelfCheckReport run_self_check(KernelVariant variant) {
  SelfCheckReport r;
  r.suites.push_back(state_validity());
  r.suites.push_back(xstate_oracle());
  r.suites.push_back(kernel_contract(variant));
  r.suites.push_back(channel_oracle(variant));
  r.suites.push_back(measure_identities());
  r.suites.push_back(hierarchy(variant));
  return r;
}

}  // namespace hyperspin
