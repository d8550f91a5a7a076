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

#include <charconv>
#include <ostream>
#include <string>

#include "hyperspin/sweep.hpp"

namespace hyperspin {

namespace {

class CountingWriter {
 public:
  explicit CountingWriter(std::ostream& os) : os_(os) {}

  void write(std::string_view s) {
    os_.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!os_) throw IoError("write to output sink failed");
    bytes_ += s.size();
  }
  std::size_t bytes() const { return bytes_; }

 private:
  std::ostream& os_;
  std::size_t bytes_ = 0;
};

void append_field(std::string& out, std::string_view value) {
  out += ',';
  out += value;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string csv_row(const SweepRow& row, const MeasureSelector& measures) {
  const GridPoint& p = row.point;
  const MeasureRecord& m = row.record;
  std::string out(channel_slug(p.channel));
  append_field(out, format_number(p.phi));
  append_field(out, format_number(p.mu));
  append_field(out, format_number(p.tau));
  append_field(out, regime_slug(p.regime));
  append_field(out, format_number(p.time));
  append_field(out, format_number(m.kernel));
  append_field(out, format_number(m.eta));
  auto maybe = [&](bool on, const std::string& text) { append_field(out, on ? text : ""); };
  maybe(measures.steering, format_number(m.steering.s_ab));
  maybe(measures.steering, format_number(m.steering.s_ba));
  maybe(measures.steering, format_number(m.steering.delta_s));
  maybe(measures.steering, std::string(steering_class_slug(m.steering.steering_class)));
  maybe(measures.entanglement, format_number(m.concurrence));
  maybe(measures.entanglement, format_number(m.eof));
  maybe(measures.discord, format_number(m.gqd));
  maybe(measures.coherence, format_number(m.coherence_l1));
  return out;
}

std::string json_row(const SweepRow& row, const MeasureSelector& measures) {
  const GridPoint& p = row.point;
  const MeasureRecord& m = row.record;
  std::string out = "{\"channel\":\"";
  out += channel_slug(p.channel);
  out += "\"";
  auto num = [&](const char* key, double v, bool on = true) {
    out += ",\"";
    out += key;
    out += "\":";
    out += on ? format_number(v) : "null";
  };
  auto str = [&](const char* key, std::string_view v, bool on = true) {
    out += ",\"";
    out += key;
    out += "\":";
    if (on) {
      out += '"';
      out += v;
      out += '"';
    } else {
      out += "null";
    }
  };
  num("phi", p.phi);
  num("mu", p.mu);
  num("tau", p.tau);
  str("regime", regime_slug(p.regime));
  num("time", p.time);
  num("kernel", m.kernel);
  num("eta", m.eta);
  num("s_ab", m.steering.s_ab, measures.steering);
  num("s_ba", m.steering.s_ba, measures.steering);
  num("delta_s", m.steering.delta_s, measures.steering);
  str("steering_class", steering_class_slug(m.steering.steering_class), measures.steering);
  num("concurrence", m.concurrence, measures.entanglement);
  num("eof", m.eof, measures.entanglement);
  num("gqd", m.gqd, measures.discord);
  num("coherence_l1", m.coherence_l1, measures.coherence);
  out += '}';
  return out;
}

std::size_t emit(const SweepResult& result, OutputFormat format, std::ostream& sink) {
  CountingWriter w(sink);
  const MeasureSelector& sel = result.metadata.measures;
  if (format == OutputFormat::Csv) {
    w.write(kCsvHeader);
    w.write("\n");
    for (const auto& row : result.rows) {
      w.write(csv_row(row, sel));
      w.write("\n");
    }
  } else {
    const SweepMetadata& md = result.metadata;
    std::string head = "{\"metadata\":{\"preset\":";
    head += md.preset.empty() ? "null" : "\"" + md.preset + "\"";
    head += ",\"grid_hash\":\"" + md.grid_hash + "\"";
    head += ",\"kernel_variant\":\"" + md.kernel_variant + "\"";
    head += ",\"version\":\"" + md.version + "\"";
    head += ",\"measures\":\"" + sel.slug() + "\"";
    head += ",\"grid\":" + (md.grid_spec.empty() ? std::string("null") : md.grid_spec);
    head += "},\n\"records\":[";
    w.write(head);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      w.write(i ? ",\n" : "\n");
      w.write(json_row(result.rows[i], sel));
    }
    w.write(result.rows.empty() ? "]}\n" : "\n]}\n");
  }
  sink.flush();
  if (!sink) throw IoError("flush of output sink failed");
  return w.bytes();
}

}  // namespace hyperspin
