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

#include <array>
#include <numbers>
#include <string>

#include "hyperspin/sweep.hpp"

namespace hyperspin {

namespace {

constexpr double kMarkovianTau = 0.1;
constexpr double kNonMarkovianTau = 5.0;
constexpr double kTimeStep = 0.01;
constexpr double kMarkovianHorizon = 5.0;
constexpr double kNonMarkovianHorizon = 50.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;

struct PresetName {
  PresetId id;
  std::string_view slug;
};

constexpr std::array<PresetName, 28> kNames = {{
    {PresetId::h1a, "h1a"},   {PresetId::h1b, "h1b"},   {PresetId::h2a, "h2a"},
    {PresetId::h2b, "h2b"},   {PresetId::sc1a, "sc1a"}, {PresetId::sc1b, "sc1b"},
    {PresetId::sc2a, "sc2a"}, {PresetId::sc2b, "sc2b"}, {PresetId::e1a, "e1a"},
    {PresetId::e1b, "e1b"},   {PresetId::e2a, "e2a"},   {PresetId::e2b, "e2b"},
    {PresetId::d1a, "d1a"},   {PresetId::d1b, "d1b"},   {PresetId::d2a, "d2a"},
    {PresetId::d2b, "d2b"},   {PresetId::c1a, "c1a"},   {PresetId::c1b, "c1b"},
    {PresetId::c2a, "c2a"},   {PresetId::c2b, "c2b"},   {PresetId::m0, "m0"},
    {PresetId::m06, "m06"},   {PresetId::m08, "m08"},   {PresetId::m1, "m1"},
    {PresetId::nm0, "nm0"},   {PresetId::nm06, "nm06"}, {PresetId::nm08, "nm08"},
    {PresetId::nm1, "nm1"},
}};

std::vector<double> full_phi_axis() {
  std::vector<double> phi(181);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = static_cast<double>(i) * std::numbers::pi / 180.0;
  }
  return phi;
}

// Angles shown as separate curves in the two-direction steering comparison.
std::vector<double> comparison_phi_axis() {
  return {std::numbers::pi / 6.0, std::numbers::pi / 4.0, std::numbers::pi / 3.0, kHalfPi};
}

SweepGrid base_grid(bool markovian) {
  SweepGrid g;
  g.channel = channel_params(ChannelName::Lambda);
  g.tau = {markovian ? kMarkovianTau : kNonMarkovianTau};
  g.time = {0.0, markovian ? kMarkovianHorizon : kNonMarkovianHorizon, kTimeStep};
  return g;
}

// "a" panels sweep phi at mu = 0.8; "b" panels sweep mu at phi = pi/2.
FigurePreset panel(PresetId id, bool markovian, bool phi_panel, MeasureSelector measures) {
  SweepGrid g = base_grid(markovian);
  if (phi_panel) {
    g.phi = full_phi_axis();
    g.mu = {0.8};
  } else {
    g.phi = {kHalfPi};
    g.mu = linspace_step(0.0, 1.0, 0.01);
  }
  return {id, g, measures};
}

FigurePreset comparison(PresetId id, bool markovian, double mu) {
  SweepGrid g = base_grid(markovian);
  g.phi = comparison_phi_axis();
  g.mu = {mu};
  return {id, g, MeasureSelector::only_steering()};
}

FigurePreset resources(PresetId id, bool markovian, double mu) {
  SweepGrid g = base_grid(markovian);
  g.phi = {kHalfPi};
  g.mu = {mu};
  return {id, g, MeasureSelector::all()};
}

}  // namespace

std::vector<PresetId> all_presets() {
  std::vector<PresetId> out;
  for (const auto& n : kNames) out.push_back(n.id);
  return out;
}

std::string_view preset_slug(PresetId id) {
  for (const auto& n : kNames)
    if (n.id == id) return n.slug;
  throw UnknownPreset("preset id " + std::to_string(static_cast<int>(id)));
}

PresetId parse_preset(std::string_view name) {
  for (const auto& n : kNames)
    if (n.slug == name) return n.id;
  throw UnknownPreset("'" + std::string(name) + "'");
}

FigurePreset figure_preset(PresetId id) {
  using S = MeasureSelector;
  switch (id) {
    case PresetId::h1a: return panel(id, true, true, S::only_steering());
    case PresetId::h1b: return panel(id, true, false, S::only_steering());
    case PresetId::h2a: return panel(id, false, true, S::only_steering());
    case PresetId::h2b: return panel(id, false, false, S::only_steering());
    case PresetId::sc1a: return comparison(id, true, 0.6);
    case PresetId::sc1b: return comparison(id, true, 0.8);
    case PresetId::sc2a: return comparison(id, false, 0.6);
    case PresetId::sc2b: return comparison(id, false, 0.8);
    case PresetId::e1a: return panel(id, true, true, S::only_entanglement());
    case PresetId::e1b: return panel(id, true, false, S::only_entanglement());
    case PresetId::e2a: return panel(id, false, true, S::only_entanglement());
    case PresetId::e2b: return panel(id, false, false, S::only_entanglement());
    case PresetId::d1a: return panel(id, true, true, S::only_discord());
    case PresetId::d1b: return panel(id, true, false, S::only_discord());
    case PresetId::d2a: return panel(id, false, true, S::only_discord());
    case PresetId::d2b: return panel(id, false, false, S::only_discord());
    case PresetId::c1a: return panel(id, true, true, S::only_coherence());
    case PresetId::c1b: return panel(id, true, false, S::only_coherence());
    case PresetId::c2a: return panel(id, false, true, S::only_coherence());
    case PresetId::c2b: return panel(id, false, false, S::only_coherence());
    case PresetId::m0: return resources(id, true, 0.0);
    case PresetId::m06: return resources(id, true, 0.6);
    case PresetId::m08: return resources(id, true, 0.8);
    case PresetId::m1: return resources(id, true, 1.0);
    case PresetId::nm0: return resources(id, false, 0.0);
    case PresetId::nm06: return resources(id, false, 0.6);
    case PresetId::nm08: return resources(id, false, 0.8);
    case PresetId::nm1: return resources(id, false, 1.0);
  }
  throw UnknownPreset("preset id " + std::to_string(static_cast<int>(id)));
}

SweepResult run_preset(PresetId id, unsigned workers) {
  const FigurePreset p = figure_preset(id);
  SweepResult r = run_sweep(p.grid, p.measures, workers);
  r.metadata.preset = std::string(preset_slug(id));
  return r;
}

}  // namespace hyperspin
