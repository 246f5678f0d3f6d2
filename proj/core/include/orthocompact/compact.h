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


// One-dimensional compaction by minimum-cost flow.
//
// A vertical step dissects the drawing into rectangles, builds a network
// with one node per face and one arc per vertical segment (flow = length),
// solves it, and reassigns y-coordinates from the flow. In Fled-Five mode,
// bend vertices on horizontal segments add arcs that let an edge jog up or
// down, and existing double bends may collapse. Horizontal steps run the
// same pipeline on the transposed drawing.

#ifndef ORTHOCOMPACT_COMPACT_H_
#define ORTHOCOMPACT_COMPACT_H_

#include <set>
#include <utility>
#include <vector>

#include "orthocompact/dissect.h"
#include "orthocompact/flow.h"
#include "orthocompact/model.h"

namespace orthocompact {

enum class Mode { kTrad, kFf };
enum class Axis { kVertical, kHorizontal };

const char* ModeName(Mode mode);  // "trad" / "ff"
const char* AxisName(Axis axis);  // "y" / "x"

// Vertical segments lying between two oppositely turning bends of the same
// edge, as (edge id, index of the segment along the edge polyline).
std::set<std::pair<EdgeId, int>> MiddleSegments(const OrthoDrawing& drawing);

struct NetworkMap {
  std::vector<int> face_node;    // face of dd.graph -> network node
  std::vector<int> segment_arc;  // segment of dd.graph -> arc, -1 if horizontal
  // Per entry of dd.bend_vertices: (a_up, a_down), -1 when omitted.
  std::vector<std::pair<int, int>> bend_arcs;
  std::set<int> middle_arcs;     // segment arcs with lower bound 0
};

struct BuiltNetwork {
  FlowNetwork network;
  NetworkMap map;
  PlaneFaces faces;
};

BuiltNetwork BuildTradNetwork(const DissectedDrawing& dd);
BuiltNetwork BuildFfNetwork(const DissectedDrawing& dd);

// The flow encoding the current geometry: segment lengths, zero on bend
// arcs. Always feasible.
Flow InitialFlow(const DissectedDrawing& dd, const BuiltNetwork& built);

// Faces around a bend vertex, in network node terms.
struct BendFaces {
  int upper_left;
  int upper_right;
  int lower_right;
  int lower_left;
};
BendFaces FacesAround(const DissectedDrawing& dd, const PlaneFaces& faces,
                      int node);

struct Realization {
  OrthoDrawing drawing;
  // Vertical length of the non-dummy segments before denormalization.
  Coord vertical_length = 0;
};

// Throws InternalError if the flow does not describe consistent
// y-coordinates.
Realization Realize(const DissectedDrawing& dd, const Flow& flow,
                    const NetworkMap& map);

struct StepResult {
  OrthoDrawing drawing;
  FlowNetwork network;
  Flow flow;
  Coord realized_vertical_length = 0;  // in the step's own frame
  int dissection_nodes = 0;
  int dissection_segments = 0;
  int visibility_segments = 0;
  int bend_vertices = 0;
  double solve_ms = 0;
};

// spacing: every spacing-th interior grid point of a horizontal run gets a
// bend vertex (Fled-Five only; values below 1 mean 1).
StepResult CompactStepDetailed(const OrthoDrawing& drawing, Mode mode,
                               Axis axis, int spacing = 1);
OrthoDrawing CompactStep(const OrthoDrawing& drawing, Mode mode, Axis axis,
                         int spacing = 1);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_COMPACT_H_
