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


// Alternating two-axis compaction and TRAD / Fled-Five comparison.

#ifndef ORTHOCOMPACT_DRIVER_H_
#define ORTHOCOMPACT_DRIVER_H_

#include <vector>

#include "orthocompact/compact.h"
#include "orthocompact/model.h"

namespace orthocompact {

struct TraceStep {
  int round = 0;  // 1-based
  Axis axis = Axis::kVertical;
  Mode mode = Mode::kTrad;
  Metrics before;
  Metrics after;
  int network_nodes = 0;
  int network_arcs = 0;
  int dissection_nodes = 0;
  int dissection_segments = 0;
  CostValue solver_cost = 0;
  Coord realized_vertical_length = 0;
  double solve_ms = 0;
};

enum class StopReason { kNoImprovement, kMaxIterations };
const char* StopReasonName(StopReason reason);

struct RunTrace {
  std::vector<TraceStep> steps;
  int rounds = 0;
  StopReason stop_reason = StopReason::kNoImprovement;
  double wall_ms = 0;
};

struct AlternateResult {
  OrthoDrawing drawing;
  RunTrace trace;
};

// Rounds of (vertical, horizontal) steps until a round leaves the total edge
// length unchanged or `max_iter` rounds ran. Throws InvalidDrawingError for
// invalid input and std::invalid_argument if max_iter < 1.
AlternateResult Alternate(const OrthoDrawing& drawing, Mode mode,
                          int max_iter = 50, int spacing = 1);

struct ComparisonReport {
  Metrics input;
  Metrics trad;
  Metrics ff;
  int trad_iterations = 0;
  int ff_iterations = 0;
  double trad_ms = 0;
  double ff_ms = 0;
  int trad_dissection_edges = 0;  // largest dissection seen during the run
  int ff_dissection_edges = 0;
  // (TRAD - FF) / TRAD * 100; zero when TRAD is zero.
  double total_edge_length_pct = 0;
  double max_edge_length_pct = 0;
  double area_pct = 0;
  int64_t bends_delta = 0;  // FF - TRAD
  // (FF - TRAD) / TRAD, or the FF bend count when TRAD has none.
  double bends_relative = 0;
};

double PercentReduction(Coord trad, Coord ff);

ComparisonReport Compare(const OrthoDrawing& drawing, int max_iter = 50,
                         int spacing = 1);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_DRIVER_H_
