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

// hyperspin command-line front end.
//
// Exit codes: 0 ok, 1 runtime or numeric failure, 2 usage error,
// 3 self-check failure.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperspin/self_check.hpp"
#include "hyperspin/sweep.hpp"

namespace {

using namespace hyperspin;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERSPIN_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || cap == 0) {
      throw UsageError("HYPERSPIN_THREADS must be a positive integer");
    }
    n = std::min(n, cap);
  }
  return n;
}

double parse_double(std::string_view s, std::string_view what) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError("malformed number '" + std::string(s) + "' in " + std::string(what));
  }
  return x;
}

// axis=start:stop:step
std::pair<std::string, TimeRange> parse_grid_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw UsageError("grid spec '" + spec + "' lacks '='");
  const std::string axis = spec.substr(0, eq);
  if (axis != "time" && axis != "phi" && axis != "mu" && axis != "tau") {
    throw UsageError("unknown grid axis '" + axis + "' (expected time, phi, mu, tau)");
  }
  std::vector<std::string_view> parts;
  std::string_view rest = std::string_view(spec).substr(eq + 1);
  for (std::size_t pos; (pos = rest.find(':')) != std::string_view::npos;) {
    parts.push_back(rest.substr(0, pos));
    rest.remove_prefix(pos + 1);
  }
  parts.push_back(rest);
  if (parts.size() != 3) throw UsageError("grid spec '" + spec + "' must be start:stop:step");
  TimeRange r{parse_double(parts[0], spec), parse_double(parts[1], spec),
              parse_double(parts[2], spec)};
  if (!(r.step > 0.0) || r.stop < r.start) {
    throw UsageError("grid spec '" + spec + "' needs step > 0 and stop >= start");
  }
  return {axis, r};
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path == "-") return std::cout;
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

struct PointOptions {
  std::string channel = "lambda";
  std::optional<double> phi;
  std::optional<double> phi_deg;
  std::optional<double> mu;
  std::optional<double> tau;
  std::optional<double> time;
  std::string format = "json";
  std::string out = "-";
  std::string kernel_variant = "paired";

  double resolved_phi() const {
    if (phi_deg) return *phi_deg * std::numbers::pi / 180.0;
    if (phi) return *phi;
    throw UsageError("--phi or --phi-deg is required");
  }
};

void add_point_options(CLI::App* cmd, PointOptions& o) {
  cmd->add_option("--channel", o.channel, "lambda, sigma+, xi-, xi0")->capture_default_str();
  auto* phi = cmd->add_option("--phi", o.phi, "production angle in radians, [0, pi]");
  cmd->add_option("--phi-deg", o.phi_deg, "production angle in degrees")->excludes(phi);
  cmd->add_option("--mu", o.mu, "classical correlation strength, [0, 1]");
  cmd->add_option("--tau", o.tau, "noise time constant, > 0");
  cmd->add_option("--time", o.time, "evolution time, >= 0");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--kernel-variant", o.kernel_variant, "paired or mixed")
      ->check(CLI::IsMember({"paired", "mixed"}))
      ->capture_default_str();
}

template <typename T>
T required(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

// Parses the channel and checks every scalar against the library's domain
// rules so that bad input is reported as a usage error.
HyperonChannel checked_channel(const std::string& name) {
  try {
    return channel_params(parse_channel(name));
  } catch (const UnknownChannel& e) {
    throw UsageError(e.what());
  }
}

template <typename F>
auto usage_on_domain_error(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const NegativeTime& e) {
    throw UsageError(e.what());
  }
}

int cmd_params(const std::string& channel) {
  const HyperonChannel ch = checked_channel(channel);
  nlohmann::ordered_json j;
  j["channel"] = std::string(channel_slug(ch.name));
  j["upsilon_psi"] = ch.upsilon_psi;
  j["delta_theta"] = ch.delta_theta;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int cmd_measure(const PointOptions& o) {
  const HyperonChannel ch = checked_channel(o.channel);
  const double phi = o.resolved_phi();
  const double t = required(o.time, "--time");
  const KernelVariant variant = parse_kernel_variant(o.kernel_variant);
  const ChannelConfig cfg = usage_on_domain_error(
      [&] { return ChannelConfig(required(o.mu, "--mu"), required(o.tau, "--tau"), variant); });
  usage_on_domain_error([&] {
    polarization(ch, phi);
    if (!(t >= 0.0)) throw NegativeTime("--time must be >= 0");
    return 0;
  });

  SweepGrid grid;
  grid.channel = ch;
  grid.phi = {phi};
  grid.mu = {cfg.mu()};
  grid.tau = {cfg.tau()};
  grid.time = {t, t, 1.0};
  grid.kernel_variant = variant;
  const SweepResult r = run_sweep(grid, MeasureSelector::all(), 1);

  std::ofstream file;
  std::ostream& os = open_sink(o.out, file);
  const MeasureSelector all = MeasureSelector::all();
  if (parse_format(o.format) == OutputFormat::Csv) {
    os << kCsvHeader << '\n' << csv_row(r.rows.front(), all) << '\n';
  } else {
    os << json_row(r.rows.front(), all) << '\n';
  }
  os.flush();
  if (!os) throw IoError("write failed");
  return kExitOk;
}

int cmd_sweep(const PointOptions& o, const std::string& figure,
              const std::vector<std::string>& grid_specs) {
  const unsigned workers = worker_count();
  SweepResult result;
  if (!figure.empty()) {
    if (!grid_specs.empty()) throw UsageError("--figure cannot be combined with --grid");
    PresetId id;
    try {
      id = parse_preset(figure);
    } catch (const UnknownPreset& e) {
      throw UsageError(e.what());
    }
    FigurePreset preset = figure_preset(id);
    preset.grid.kernel_variant = parse_kernel_variant(o.kernel_variant);
    result = run_sweep(preset.grid, preset.measures, workers);
    result.metadata.preset = std::string(preset_slug(id));
  } else {
    std::map<std::string, TimeRange> axes;
    for (const auto& spec : grid_specs) {
      auto [axis, range] = parse_grid_spec(spec);
      if (!axes.emplace(axis, range).second) throw UsageError("grid axis '" + axis + "' given twice");
    }
    auto axis_values = [&](const std::string& axis, const std::optional<double>& scalar,
                           const char* flag) -> std::vector<double> {
      const auto it = axes.find(axis);
      if (it != axes.end()) {
        if (scalar) throw UsageError(std::string(flag) + " conflicts with --grid " + axis);
        return linspace_step(it->second.start, it->second.stop, it->second.step);
      }
      return {required(scalar, flag)};
    };
    SweepGrid grid;
    grid.channel = checked_channel(o.channel);
    grid.kernel_variant = parse_kernel_variant(o.kernel_variant);
    if (axes.count("phi")) {
      if (o.phi || o.phi_deg) throw UsageError("--phi conflicts with --grid phi");
      grid.phi = axis_values("phi", std::nullopt, "--phi");
    } else {
      grid.phi = {o.resolved_phi()};
    }
    grid.mu = axis_values("mu", o.mu, "--mu");
    grid.tau = axis_values("tau", o.tau, "--tau");
    if (const auto it = axes.find("time"); it != axes.end()) {
      if (o.time) throw UsageError("--time conflicts with --grid time");
      grid.time = it->second;
    } else {
      const double t = required(o.time, "--time");
      grid.time = {t, t, 1.0};
    }
    usage_on_domain_error([&] {
      grid.validate();
      return 0;
    });
    result = run_sweep(grid, MeasureSelector::all(), workers);
  }

  std::ofstream file;
  std::ostream& os = open_sink(o.out, file);
  const std::size_t bytes = emit(result, parse_format(o.format), os);
  std::cerr << "hyperspin: " << result.rows.size() << (result.rows.size() == 1 ? " row, " : " rows, ")
            << bytes << " bytes"
            << (result.metadata.preset.empty() ? "" : ", preset " + result.metadata.preset)
            << ", grid " << result.metadata.grid_hash << " -> " << (o.out == "-" ? "stdout" : o.out)
            << '\n';
  return kExitOk;
}

int cmd_check(const std::string& kernel_variant) {
  const SelfCheckReport report = run_self_check(parse_kernel_variant(kernel_variant));
  std::cout << "hyperspin self-check (kernel " << kernel_variant << ")\n";
  for (const auto& s : report.suites) {
    std::cout << "  [" << (s.passed() ? "PASS" : "FAIL") << "] " << s.name << ": "
              << s.checks - s.failures << "/" << s.checks << " checks passed";
    if (!s.passed()) std::cout << "; first failure: " << s.first_failure;
    std::cout << '\n';
  }
  std::cout << (report.passed() ? "all suites passed" : "self-check FAILED") << " ("
            << report.total_failures() << " failures in " << report.total_checks()
            << " checks)\n";
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperon-pair spin correlations under correlated dephasing"};
  app.require_subcommand(1);

  std::string params_channel;
  auto* params = app.add_subcommand("params", "print the production parameters of a channel");
  params->add_option("--channel", params_channel, "lambda, sigma+, xi-, xi0")->required();

  PointOptions measure_opts;
  auto* measure = app.add_subcommand("measure", "evaluate all measures at one point");
  add_point_options(measure, measure_opts);

  PointOptions sweep_opts;
  sweep_opts.format = "csv";
  std::string figure;
  std::vector<std::string> grid_specs;
  auto* sweep = app.add_subcommand("sweep", "evaluate a figure preset or an explicit grid");
  add_point_options(sweep, sweep_opts);
  sweep->add_option("--figure", figure, "figure preset id, e.g. m08");
  sweep->add_option("--grid", grid_specs, "axis=start:stop:step for time, phi, mu or tau");

  std::string check_variant = "paired";
  auto* check = app.add_subcommand("check", "run the embedded invariant suite");
  check->add_option("--kernel-variant", check_variant, "paired or mixed")
      ->check(CLI::IsMember({"paired", "mixed"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kExitOk;
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*params) return cmd_params(params_channel);
    if (*measure) return cmd_measure(measure_opts);
    if (*sweep) return cmd_sweep(sweep_opts, figure, grid_specs);
    if (*check) return cmd_check(check_variant);
  } catch (const UsageError& e) {
    std::cerr << "hyperspin: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hyperspin: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
