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

// Vertical dissection of a normalized drawing into rectangular faces.
//
// Every reflex corner sends a vertical ray into its open side; the ray stops
// at the first vertex or horizontal segment it meets, splitting the segment
// with a dummy node when it lands in its interior. Bend vertices (potential
// double bends, one per selected interior grid point of a horizontal
// segment) send rays both ways, which cuts the drawing into unit-wide
// vertical stripes around them.

#ifndef ORTHOCOMPACT_DISSECT_H_
#define ORTHOCOMPACT_DISSECT_H_

#include <span>
#include <utility>
#include <vector>

#include "orthocompact/normalize.h"
#include "orthocompact/plane_graph.h"

namespace orthocompact {

enum class NodeKind { kOriginal, kBendDummy, kBendVertex, kSplitDummy };
enum class SegmentKind { kOriginal, kVisibility };

// A grid point on a horizontal normalized edge that may become a double
// bend.
struct BendVertexSite {
  EdgeId normalized_edge = 0;
  EdgeId host_edge = 0;  // id of the edge in the un-normalized drawing
  GridPoint pos;

  friend bool operator==(const BendVertexSite&,
                         const BendVertexSite&) = default;
};

// Places a site on every `spacing`-th interior grid point of every
// horizontal segment, counted from the segment's left end. Segments of
// horizontal length 1 have no interior points and get none.
std::vector<BendVertexSite> InsertBendVertices(const NormalizedDrawing& nd,
                                               int spacing = 1);

struct BendVertexRecord {
  int node = -1;
  EdgeId host_edge = 0;
  EdgeId normalized_edge = 0;
  Coord x = 0;
};

struct DissectedDrawing {
  NormalizedDrawing source;
  PlaneGraph graph;
  std::vector<NodeKind> node_kind;
  std::vector<VertexId> node_vertex;  // normalized vertex id or -1
  std::vector<SegmentKind> segment_kind;
  std::vector<EdgeId> segment_edge;   // normalized edge id or -1
  // Per normalized edge (same order as source.drawing.edges): the nodes
  // passed from its source to its target.
  std::vector<std::vector<int>> edge_chain;
  std::vector<BendVertexRecord> bend_vertices;

  int CountSegments(SegmentKind kind) const;
};

// Left-to-right sweep inserting the visibility edges. With
// `bend_vertices_as_reflex` every site also shoots rays up and down.
DissectedDrawing VerticalDissect(
    const NormalizedDrawing& nd,
    std::span<const BendVertexSite> bend_vertices = {},
    bool bend_vertices_as_reflex = true);

// (node count, segment count) of the dissected plane graph.
std::pair<int, int> DissectionSize(const DissectedDrawing& dd);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_DISSECT_H_
