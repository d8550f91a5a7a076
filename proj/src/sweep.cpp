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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "hyperspin/sweep.hpp"

namespace hyperspin {

namespace {

constexpr double kCountSlack = 1e-9;

std::string list_json(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  out += ']';
  return out;
}

std::string describe(const GridPoint& p) {
  std::ostringstream os;
  os << "channel=" << channel_slug(p.channel) << " phi=" << format_number(p.phi)
     << " mu=" << format_number(p.mu) << " tau=" << format_number(p.tau)
     << " time=" << format_number(p.time);
  return os.str();
}

}  // namespace

std::size_t TimeRange::count() const {
  if (!(step > 0.0) || stop < start) return 0;
  return static_cast<std::size_t>(std::floor((stop - start) / step + kCountSlack)) + 1;
}

std::vector<double> linspace_step(double start, double stop, double step) {
  const TimeRange r{start, stop, step};
  std::vector<double> out(r.count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.at(i);
  return out;
}

void SweepGrid::validate() const {
  if (phi.empty() || mu.empty() || tau.empty()) throw DomainError("sweep axes must be non-empty");
  if (!(time.step > 0.0)) throw DomainError("time step must be positive");
  if (!(time.start >= 0.0) || time.stop < time.start) {
    throw DomainError("time range must satisfy 0 <= start <= stop");
  }
  for (double p : phi) {
    if (!(p >= -1e-12 && p <= std::numbers::pi + 1e-12)) {
      throw DomainError("phi value outside [0, pi]: " + format_number(p));
    }
  }
  for (double m : mu) {
    if (!(m >= 0.0 && m <= 1.0)) throw DomainError("mu value outside [0, 1]: " + format_number(m));
  }
  for (double t : tau) {
    if (!(t > 0.0)) throw DomainError("tau value must be positive: " + format_number(t));
  }
}

std::size_t SweepGrid::size() const { return phi.size() * mu.size() * tau.size() * time.count(); }

std::string MeasureSelector::slug() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(steering, "steering");
  add(entanglement, "eof");
  add(discord, "gqd");
  add(coherence, "coherence");
  return out.empty() ? "none" : out;
}

std::string grid_spec_json(const SweepGrid& grid) {
  std::string out = "{\"channel\":\"";
  out += channel_slug(grid.channel.name);
  out += "\",\"upsilon_psi\":" + format_number(grid.channel.upsilon_psi);
  out += ",\"delta_theta\":" + format_number(grid.channel.delta_theta);
  out += ",\"phi\":" + list_json(grid.phi);
  out += ",\"mu\":" + list_json(grid.mu);
  out += ",\"tau\":" + list_json(grid.tau);
  out += ",\"time\":{\"start\":" + format_number(grid.time.start) +
         ",\"stop\":" + format_number(grid.time.stop) +
         ",\"step\":" + format_number(grid.time.step) + "}}";
  return out;
}

std::string grid_hash(const SweepGrid& grid) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : grid_spec_json(grid) + std::string(kernel_variant_slug(grid.kernel_variant))) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SweepResult run_sweep(const SweepGrid& grid, const MeasureSelector& measures, unsigned workers) {
  grid.validate();

  SweepResult result;
  result.metadata.grid_hash = grid_hash(grid);
  result.metadata.kernel_variant = std::string(kernel_variant_slug(grid.kernel_variant));
  result.metadata.version = std::string(kVersion);
  result.metadata.grid_spec = grid_spec_json(grid);
  result.metadata.measures = measures;

  const std::size_t n_phi = grid.phi.size();
  const std::size_t n_mu = grid.mu.size();
  const std::size_t n_tau = grid.tau.size();
  const std::size_t n_t = grid.time.count();
  const std::size_t total = n_phi * n_mu * n_tau * n_t;
  result.rows.resize(total);
  if (total == 0) return result;

  // Initial states depend on phi only.
  std::vector<DensityMatrix4> initial;
  initial.reserve(n_phi);
  for (double phi : grid.phi) {
    try {
      initial.push_back(density_matrix(grid.channel, phi));
    } catch (const Error& e) {
      GridPoint p{grid.channel.name, phi, grid.mu[0], grid.tau[0], Regime::Markovian, grid.time.start};
      throw SweepPointError(describe(p) + ": " + e.what());
    }
  }

  std::mutex error_mutex;
  std::size_t error_index = total;
  std::string error_text;

  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      const std::size_t it = rest % n_t;
      rest /= n_t;
      const std::size_t itau = rest % n_tau;
      rest /= n_tau;
      const std::size_t imu = rest % n_mu;
      const std::size_t iphi = rest / n_mu;

      SweepRow& row = result.rows[idx];
      row.point.channel = grid.channel.name;
      row.point.phi = grid.phi[iphi];
      row.point.mu = grid.mu[imu];
      row.point.tau = grid.tau[itau];
      row.point.time = grid.time.at(it);
      try {
        const ChannelConfig cfg(row.point.mu, row.point.tau, grid.kernel_variant);
        row.point.regime = cfg.regime();
        const KernelValue k = memory_kernel(row.point.time, cfg);
        flip_probability(k);  // rejects kernels outside [-1, 1]
        const double e = eta_from_kernel(k.k, cfg.mu());
        row.record = measure_all(apply_eta(initial[iphi], e), e, k.k);
      } catch (const std::exception& ex) {
        std::lock_guard lock(error_mutex);
        if (idx < error_index) {
          error_index = idx;
          error_text = describe(row.point) + ": " + ex.what();
        }
        return;
      }
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::clamp<std::size_t>(workers == 0 ? 1 : workers, 1, total));
  if (n_workers == 1) {
    evaluate_range(0, total);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    const std::size_t chunk = (total + n_workers - 1) / n_workers;
    for (unsigned w = 0; w < n_workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(evaluate_range, begin, end);
    }
  }
  if (error_index != total) throw SweepPointError(error_text);
  return result;
}

}  // namespace hyperspin
