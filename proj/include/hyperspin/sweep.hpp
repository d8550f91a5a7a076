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

// Cartesian parameter sweeps over (channel, phi, mu, tau, t), figure
// presets and deterministic CSV/JSON emission.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspin/dephasing_channel.hpp"
#include "hyperspin/measures.hpp"

namespace hyperspin {

inline constexpr std::string_view kVersion = "0.1.0";

/// Inclusive arithmetic progression start, start + step, ..., <= stop.
struct TimeRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::size_t count() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Inclusive progression as a value list; shares TimeRange's counting rule.
std::vector<double> linspace_step(double start, double stop, double step);

struct SweepGrid {
  HyperonChannel channel = channel_params(ChannelName::Lambda);
  std::vector<double> phi;
  std::vector<double> mu;
  std::vector<double> tau;
  TimeRange time;
  KernelVariant kernel_variant = KernelVariant::Paired;

  /// Throws DomainError on empty axes, non-positive step or out-of-domain values.
  void validate() const;
  std::size_t size() const;
};

/// Which measure columns a sweep reports. Kernel and eta are always reported.
struct MeasureSelector {
  bool steering = true;
  bool entanglement = true;
  bool discord = true;
  bool coherence = true;

  static MeasureSelector all() { return {}; }
  static MeasureSelector only_steering() { return {true, false, false, false}; }
  static MeasureSelector only_entanglement() { return {false, true, false, false}; }
  static MeasureSelector only_discord() { return {false, false, true, false}; }
  static MeasureSelector only_coherence() { return {false, false, false, true}; }

  std::string slug() const;
  friend bool operator==(const MeasureSelector&, const MeasureSelector&) = default;
};

struct GridPoint {
  ChannelName channel = ChannelName::Lambda;
  double phi = 0.0;
  double mu = 0.0;
  double tau = 0.0;
  Regime regime = Regime::Markovian;
  double time = 0.0;
};

struct SweepRow {
  GridPoint point;
  MeasureRecord record;
};

struct SweepMetadata {
  std::string preset;  // empty for ad-hoc grids
  std::string grid_hash;
  std::string kernel_variant;
  std::string version;
  std::string grid_spec;  // canonical JSON object text
  MeasureSelector measures;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepMetadata metadata;
};

/// Raised when a grid point fails; the message names the point.
class SweepPointError : public Error {
 public:
  explicit SweepPointError(const std::string& what) : Error("SweepPointError: " + what) {}
};

/// Evaluates every grid point. Output order is lexicographic in
/// (phi, mu, tau, t) and does not depend on `workers`.
SweepResult run_sweep(const SweepGrid& grid, const MeasureSelector& measures,
                      unsigned workers = 1);

/// Canonical description of a grid, used in metadata and for hashing.
std::string grid_spec_json(const SweepGrid& grid);
std::string grid_hash(const SweepGrid& grid);

// ---------------------------------------------------------------------------
// Figure presets

enum class PresetId {
  h1a, h1b, h2a, h2b,
  sc1a, sc1b, sc2a, sc2b,
  e1a, e1b, e2a, e2b,
  d1a, d1b, d2a, d2b,
  c1a, c1b, c2a, c2b,
  m0, m06, m08, m1,
  nm0, nm06, nm08, nm1,
};

std::vector<PresetId> all_presets();
std::string_view preset_slug(PresetId id);
/// Throws UnknownPreset.
PresetId parse_preset(std::string_view name);

struct FigurePreset {
  PresetId id;
  SweepGrid grid;
  MeasureSelector measures;
};

FigurePreset figure_preset(PresetId id);

/// Runs a preset and tags the metadata with its id.
SweepResult run_preset(PresetId id, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Emission

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "channel,phi,mu,tau,regime,time,kernel,eta,s_ab,s_ba,delta_s,steering_class,"
    "concurrence,eof,gqd,coherence_l1";

/// 12 significant digits, '.' separator, no locale dependence; -0 prints as 0.
std::string format_number(double x);

/// Writes the result and returns the number of bytes written. Throws IoError.
std::size_t emit(const SweepResult& result, OutputFormat format, std::ostream& sink);

/// One CSV data line (no trailing newline) for a row.
std::string csv_row(const SweepRow& row, const MeasureSelector& measures);
/// One flat JSON object for a row.
std::string json_row(const SweepRow& row, const MeasureSelector& measures);

}  // namespace hyperspin
