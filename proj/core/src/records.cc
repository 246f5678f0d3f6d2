// Copyright 2026 The orthocompact Authors
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


#include <sstream>

#include "json.hpp"
#include "orthocompact/errors.h"
#include "orthocompact/io.h"

namespace orthocompact {
namespace {

using nlohmann::ordered_json;

ordered_json MetricsFields(const Metrics& m) {
  ordered_json j;
  j["total_edge_length"] = m.total_edge_length;
  j["max_edge_length"] = m.max_edge_length;
  j["width"] = m.width;
  j["height"] = m.height;
  j["area"] = m.area;
  j["bends"] = m.bend_count;
  return j;
}

ordered_json RecordJson(const MetricsRecord& record) {
  ordered_json j;
  j["instance"] = record.instance;
  j["mode"] = record.mode;
  j["iterations"] = record.iterations;
  j.update(MetricsFields(record.metrics));
  j["dissection_edges"] = record.dissection_edges;
  j["wall_time_ms"] = record.wall_time_ms;
  return j;
}

}  // namespace

std::string ToJsonLine(const MetricsRecord& record) {
  return RecordJson(record).dump();
}

MetricsRecord MetricsRecordFromJson(std::string_view line) {
  const ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError(1, 1, "not a JSON object");
  }
  try {
    MetricsRecord r;
    r.instance = j.at("instance").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.iterations = j.at("iterations").get<int>();
    r.metrics.total_edge_length = j.at("total_edge_length").get<Coord>();
    r.metrics.max_edge_length = j.at("max_edge_length").get<Coord>();
    r.metrics.width = j.at("width").get<Coord>();
    r.metrics.height = j.at("height").get<Coord>();
    r.metrics.area = j.at("area").get<Coord>();
    r.metrics.bend_count = j.at("bends").get<int64_t>();
    r.dissection_edges = j.at("dissection_edges").get<int>();
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const ordered_json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

std::string ComparisonJsonLine(const std::string& instance,
                               const ComparisonReport& report) {
  ordered_json j;
  j["instance"] = instance;
  j["mode"] = "compare";
  j["total_edge_length_pct"] = report.total_edge_length_pct;
  j["max_edge_length_pct"] = report.max_edge_length_pct;
  j["area_pct"] = report.area_pct;
  j["bends_delta"] = report.bends_delta;
  j["bends_relative"] = report.bends_relative;
  j["trad_iterations"] = report.trad_iterations;
  j["ff_iterations"] = report.ff_iterations;
  return j.dump();
}

std::string ComparisonJsonLines(const std::string& instance,
                                const ComparisonReport& report) {
  std::ostringstream out;
  out << ToJsonLine({instance, "input", 0, report.input, 0, 0}) << '\n';
  out << ToJsonLine({instance, "trad", report.trad_iterations, report.trad,
                     report.trad_dissection_edges, report.trad_ms})
      << '\n';
  out << ToJsonLine({instance, "ff", report.ff_iterations, report.ff,
                     report.ff_dissection_edges, report.ff_ms})
      << '\n';
  out << ComparisonJsonLine(instance, report) << '\n';
  return out.str();
}

std::string TraceJsonLines(const std::string& instance, const RunTrace& trace) {
  std::ostringstream out;
  for (const TraceStep& step : trace.steps) {
    ordered_json j;
    j["instance"] = instance;
    j["round"] = step.round;
    j["axis"] = AxisName(step.axis);
    j["mode"] = ModeName(step.mode);
    j["before"] = MetricsFields(step.before);
    j["after"] = MetricsFields(step.after);
    j["network_nodes"] = step.network_nodes;
    j["network_arcs"] = step.network_arcs;
    j["dissection_edges"] = step.dissection_segments;
    j["solver_cost"] = step.solver_cost;
    j["solve_ms"] = step.solve_ms;
    out << j.dump() << '\n';
  }
  ordered_json end;
  end["instance"] = instance;
  end["rounds"] = trace.rounds;
  end["stop_reason"] = StopReasonName(trace.stop_reason);
  end["wall_time_ms"] = trace.wall_ms;
  out << end.dump() << '\n';
  return out.str();
}

}  // namespace orthocompact
