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

// Planar orthogonal grid drawings of 4-graphs: the data model, validation,
// embedding extraction, vertex star geometry and layout metrics.

#ifndef ORTHOCOMPACT_MODEL_H_
#define ORTHOCOMPACT_MODEL_H_

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthocompact/geometry.h"
#include "orthocompact/plane_graph.h"

namespace orthocompact {

using VertexId = int;
using EdgeId = int;

struct Vertex {
  VertexId id = 0;
  GridPoint pos;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// An undirected edge drawn as a polyline from `source` through `bends` to
// `target`. Consecutive points differ in exactly one coordinate and
// consecutive segments alternate between horizontal and vertical.
struct Edge {
  EdgeId id = 0;
  VertexId source = 0;
  VertexId target = 0;
  std::vector<GridPoint> bends;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct OrthoDrawing {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const OrthoDrawing&, const OrthoDrawing&) = default;

  // Id -> position. Later duplicates shadow earlier ones.
  std::unordered_map<VertexId, GridPoint> PositionsById() const;

  // Full polyline of `edge` including both endpoints. Throws
  // InvalidDrawingError on an unknown endpoint id.
  std::vector<GridPoint> Polyline(const Edge& edge) const;
  std::vector<std::vector<GridPoint>> Polylines() const;

  VertexId NextVertexId() const;
  EdgeId NextEdgeId() const;
};

// Drops repeated points and interior points where the polyline continues
// straight on. Reversals are kept so that validation can report them.
std::vector<GridPoint> CanonicalPolyline(std::vector<GridPoint> points);

// Applies CanonicalPolyline to every edge.
OrthoDrawing Canonicalized(OrthoDrawing drawing);

// Swaps x and y of every vertex and bend.
OrthoDrawing Transposed(OrthoDrawing drawing);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kEmpty,
  kDuplicateId,
  kUnknownVertex,
  kDegree,
  kNonAxisSegment,
  kStraightOrReversedBend,
  kStarGeometry,
  kPlanarity,
  kDisconnected,
};

const char* ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertex_ids;
  std::vector<EdgeId> edge_ids;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  int Count(ViolationKind kind) const;
  std::string ToString() const;
};

// Lists every violated drawing invariant. Empty iff the drawing is a valid
// planar orthogonal grid drawing of a connected 4-graph.
ValidationReport Validate(const OrthoDrawing& drawing);

// Throws InvalidDrawingError carrying the report text.
void ValidateOrThrow(const OrthoDrawing& drawing);

// ---------------------------------------------------------------------------
// Embedding

struct Face {
  std::vector<int> darts;  // darts of Embedding::graph, face on the left
  bool is_external = false;
  int quarter_turns = 0;   // sum of turn angles in units of 90 degrees
};

// The embedding induced by a drawing, computed on its normalized multigraph
// (every vertex and bend is a node, every polyline segment a segment).
struct Embedding {
  PlaneGraph graph;
  std::vector<VertexId> node_vertex;  // -1 for bend nodes
  // (edge id, index of the segment along the edge polyline)
  std::vector<std::pair<EdgeId, int>> segment_origin;
  std::vector<Face> faces;
  int external_face = -1;
  std::vector<int> dart_face;
  // Clockwise from North: directions of the darts leaving each vertex.
  std::map<VertexId, std::vector<Direction>> rotation;
};

// Precondition: Validate(drawing) is empty. Throws InvalidDrawingError on
// disconnected input. Face ids are assigned in order of their smallest dart.
Embedding ComputeEmbedding(const OrthoDrawing& drawing);

// Builds the normalized plane graph of a drawing without tracing faces.
// `node_vertex` and `segment_origin` may be null.
PlaneGraph BuildPlaneGraph(const OrthoDrawing& drawing,
                           std::vector<VertexId>* node_vertex,
                           std::vector<std::pair<EdgeId, int>>* segment_origin);

// ---------------------------------------------------------------------------
// Star geometry

// Per vertex: (incident edge, initial direction) sorted by edge id. A
// self-loop contributes two entries.
struct StarGeometry {
  std::map<VertexId, std::vector<std::pair<EdgeId, Direction>>> at;

  friend bool operator==(const StarGeometry&, const StarGeometry&) = default;
};

StarGeometry ComputeStarGeometry(const OrthoDrawing& drawing);

// ---------------------------------------------------------------------------
// Metrics

struct Metrics {
  Coord total_edge_length = 0;
  Coord max_edge_length = 0;
  Coord width = 0;
  Coord height = 0;
  Coord area = 0;
  int64_t bend_count = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Area is the bounding-box product over all vertices and bends.
Metrics ComputeMetrics(const OrthoDrawing& drawing);

// Sum of vertical (resp. horizontal) segment lengths over all edges.
Coord VerticalLength(const OrthoDrawing& drawing);
Coord HorizontalLength(const OrthoDrawing& drawing);

// Edge id -> horizontal length of that edge.
std::map<EdgeId, Coord> HorizontalLengthByEdge(const OrthoDrawing& drawing);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_MODEL_H_
