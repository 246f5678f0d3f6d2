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


#include "orthocompact/driver.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace orthocompact {

const char* StopReasonName(StopReason reason) {
  return reason == StopReason::kNoImprovement ? "no_improvement"
                                              : "max_iterations";
}

AlternateResult Alternate(const OrthoDrawing& drawing, Mode mode, int max_iter,
                          int spacing) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  ValidateOrThrow(drawing);
  const auto start = std::chrono::steady_clock::now();
  AlternateResult result;
  result.drawing = drawing;
  RunTrace& trace = result.trace;
  Metrics current = ComputeMetrics(drawing);
  for (int round = 1; round <= max_iter; ++round) {
    const Coord length_before = current.total_edge_length;
    for (Axis axis : {Axis::kVertical, Axis::kHorizontal}) {
      StepResult step =
          CompactStepDetailed(result.drawing, mode, axis, spacing);
      TraceStep entry;
      entry.round = round;
      entry.axis = axis;
      entry.mode = mode;
      entry.before = current;
      entry.after = ComputeMetrics(step.drawing);
      entry.network_nodes = step.network.num_nodes();
      entry.network_arcs = step.network.num_arcs();
      entry.dissection_nodes = step.dissection_nodes;
      entry.dissection_segments = step.dissection_segments;
      entry.solver_cost = step.flow.total_cost;
      entry.realized_vertical_length = step.realized_vertical_length;
      entry.solve_ms = step.solve_ms;
      trace.steps.push_back(entry);
      current = entry.after;
      result.drawing = std::move(step.drawing);
    }
    trace.rounds = round;
    if (current.total_edge_length == length_before) {
      trace.stop_reason = StopReason::kNoImprovement;
      break;
    }
    trace.stop_reason = StopReason::kMaxIterations;
  }
  trace.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

double PercentReduction(Coord trad, Coord ff) {
  if (trad == 0) return 0;
  return static_cast<double>(trad - ff) / static_cast<double>(trad) * 100.0;
}

namespace {

int LargestDissection(const RunTrace& trace) {
  int largest = 0;
  for (const TraceStep& s : trace.steps) {
    largest = std::max(largest, s.dissection_segments);
  }
  return largest;
}

}  // namespace

ComparisonReport Compare(const OrthoDrawing& drawing, int max_iter,
                         int spacing) {
  ComparisonReport report;
  report.input = ComputeMetrics(drawing);
  const AlternateResult trad = Alternate(drawing, Mode::kTrad, max_iter,
                                         spacing);
  const AlternateResult ff = Alternate(drawing, Mode::kFf, max_iter, spacing);
  report.trad = ComputeMetrics(trad.drawing);
  report.ff = ComputeMetrics(ff.drawing);
  report.trad_iterations = trad.trace.rounds;
  report.ff_iterations = ff.trace.rounds;
  report.trad_ms = trad.trace.wall_ms;
  report.ff_ms = ff.trace.wall_ms;
  report.trad_dissection_edges = LargestDissection(trad.trace);
  report.ff_dissection_edges = LargestDissection(ff.trace);
  report.total_edge_length_pct = PercentReduction(
      report.trad.total_edge_length, report.ff.total_edge_length);
  report.max_edge_length_pct = PercentReduction(report.trad.max_edge_length,
                                                report.ff.max_edge_length);
  report.area_pct = PercentReduction(report.trad.area, report.ff.area);
  report.bends_delta = report.ff.bend_count - report.trad.bend_count;
  report.bends_relative =
      report.trad.bend_count > 0
          ? static_cast<double>(report.bends_delta) /
                static_cast<double>(report.trad.bend_count)
          : static_cast<double>(report.ff.bend_count);
  return report;
}

}  // namespace orthocompact
