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

#include "orthocompact/model.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "orthocompact/errors.h"

namespace orthocompact {

std::unordered_map<VertexId, GridPoint> OrthoDrawing::PositionsById() const {
  std::unordered_map<VertexId, GridPoint> positions;
  positions.reserve(vertices.size());
  for (const Vertex& v : vertices) positions[v.id] = v.pos;
  return positions;
}

namespace {

std::vector<GridPoint> PolylineWith(
    const std::unordered_map<VertexId, GridPoint>& positions,
    const Edge& edge) {
  const auto s = positions.find(edge.source);
  const auto t = positions.find(edge.target);
  if (s == positions.end() || t == positions.end()) {
    throw InvalidDrawingError("edge " + std::to_string(edge.id) +
                              " references an unknown vertex");
  }
  std::vector<GridPoint> points;
  points.reserve(edge.bends.size() + 2);
  points.push_back(s->second);
  points.insert(points.end(), edge.bends.begin(), edge.bends.end());
  points.push_back(t->second);
  return points;
}

bool IsAxisStep(GridPoint a, GridPoint b) {
  return (a.x == b.x) != (a.y == b.y);
}

}  // namespace

std::vector<GridPoint> OrthoDrawing::Polyline(const Edge& edge) const {
  return PolylineWith(PositionsById(), edge);
}

std::vector<std::vector<GridPoint>> OrthoDrawing::Polylines() const {
  const auto positions = PositionsById();
  std::vector<std::vector<GridPoint>> result;
  result.reserve(edges.size());
  for (const Edge& e : edges) result.push_back(PolylineWith(positions, e));
  return result;
}

VertexId OrthoDrawing::NextVertexId() const {
  VertexId next = 0;
  for (const Vertex& v : vertices) next = std::max(next, v.id + 1);
  return next;
}

EdgeId OrthoDrawing::NextEdgeId() const {
  EdgeId next = 0;
  for (const Edge& e : edges) next = std::max(next, e.id + 1);
  return next;
}

std::vector<GridPoint> CanonicalPolyline(std::vector<GridPoint> points) {
  std::vector<GridPoint> out;
  out.reserve(points.size());
  for (const GridPoint& p : points) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const GridPoint a = out[out.size() - 2];
      const GridPoint b = out.back();
      if (IsAxisStep(a, b) && IsAxisStep(b, p) &&
          DirectionBetween(a, b) == DirectionBetween(b, p)) {
        out.back() = p;
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

OrthoDrawing Canonicalized(OrthoDrawing drawing) {
  const auto positions = drawing.PositionsById();
  for (Edge& e : drawing.edges) {
    if (!positions.contains(e.source) || !positions.contains(e.target)) {
      continue;
    }
    std::vector<GridPoint> points =
        CanonicalPolyline(PolylineWith(positions, e));
    if (points.size() < 2) continue;  // degenerate; left for validation
    e.bends.assign(points.begin() + 1, points.end() - 1);
  }
  return drawing;
}

OrthoDrawing Transposed(OrthoDrawing drawing) {
  for (Vertex& v : drawing.vertices) v.pos = Transposed(v.pos);
  for (Edge& e : drawing.edges) {
    for (GridPoint& b : e.bends) b = Transposed(b);
  }
  return drawing;
}

// ---------------------------------------------------------------------------
// Validation

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmpty:
      return "empty";
    case ViolationKind::kDuplicateId:
      return "duplicate-id";
    case ViolationKind::kUnknownVertex:
      return "unknown-vertex";
    case ViolationKind::kDegree:
      return "degree";
    case ViolationKind::kNonAxisSegment:
      return "non-axis-segment";
    case ViolationKind::kStraightOrReversedBend:
      return "straight-or-reversed-bend";
    case ViolationKind::kStarGeometry:
      return "star-geometry";
    case ViolationKind::kPlanarity:
      return "planarity";
    case ViolationKind::kDisconnected:
      return "disconnected";
  }
  return "unknown";
}

int ValidationReport::Count(ViolationKind kind) const {
  return static_cast<int>(
      std::count_if(violations.begin(), violations.end(),
                    [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::ToString() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << ViolationKindName(v.kind) << ": " << v.message;
    if (!v.vertex_ids.empty()) {
      os << " [vertices";
      for (VertexId id : v.vertex_ids) os << " " << id;
      os << "]";
    }
    if (!v.edge_ids.empty()) {
      os << " [edges";
      for (EdgeId id : v.edge_ids) os << " " << id;
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

struct Segment {
  GridPoint a;
  GridPoint b;
  EdgeId edge;
  int edge_index;  // position of the edge in drawing.edges
  int index;       // segment index along the polyline
  int count;       // number of segments of the polyline
  Coord xmin() const { return std::min(a.x, b.x); }
  Coord xmax() const { return std::max(a.x, b.x); }
  Coord ymin() const { return std::min(a.y, b.y); }
  Coord ymax() const { return std::max(a.y, b.y); }
};

// Vertex at which the polyline containing `s` ends, if `p` is that end.
std::optional<VertexId> PolylineEndAt(const Segment& s, GridPoint p,
                                      const Edge& edge) {
  if (s.index == 0 && p == s.a) return edge.source;
  if (s.index == s.count - 1 && p == s.b) return edge.target;
  return std::nullopt;
}

void CheckPlanarity(const OrthoDrawing& drawing,
                    const std::vector<Segment>& segments,
                    ValidationReport& report) {
  // Coincident vertices.
  std::vector<int> order(drawing.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return std::pair(drawing.vertices[i].pos.x, drawing.vertices[i].pos.y) <
           std::pair(drawing.vertices[j].pos.x, drawing.vertices[j].pos.y);
  });
  for (size_t k = 1; k < order.size(); ++k) {
    const Vertex& u = drawing.vertices[order[k - 1]];
    const Vertex& v = drawing.vertices[order[k]];
    if (u.pos == v.pos) {
      std::ostringstream msg;
      msg << "vertices share position " << u.pos;
      report.violations.push_back(
          {ViolationKind::kPlanarity, {u.id, v.id}, {}, msg.str()});
    }
  }

  // Vertices lying on segments. `by_column` is sorted by (x, y) and
  // `by_row` by (y, x) so each segment is a contiguous range.
  std::vector<const Vertex*> by_column, by_row;
  for (const Vertex& v : drawing.vertices) {
    by_column.push_back(&v);
    by_row.push_back(&v);
  }
  std::sort(by_column.begin(), by_column.end(),
            [](const Vertex* l, const Vertex* r) {
              return std::pair(l->pos.x, l->pos.y) <
                     std::pair(r->pos.x, r->pos.y);
            });
  std::sort(by_row.begin(), by_row.end(), [](const Vertex* l, const Vertex* r) {
    return std::pair(l->pos.y, l->pos.x) < std::pair(r->pos.y, r->pos.x);
  });
  std::set<std::pair<VertexId, EdgeId>> vertex_hits;
  for (const Segment& s : segments) {
    const Edge& edge = drawing.edges[s.edge_index];
    const bool vertical = s.a.x == s.b.x;
    auto& list = vertical ? by_column : by_row;
    auto key = [vertical](const Vertex* v) {
      return vertical ? std::pair(v->pos.x, v->pos.y)
                      : std::pair(v->pos.y, v->pos.x);
    };
    const auto lo = vertical ? std::pair(s.a.x, s.ymin())
                             : std::pair(s.a.y, s.xmin());
    const auto hi = vertical ? std::pair(s.a.x, s.ymax())
                             : std::pair(s.a.y, s.xmax());
    auto it = std::lower_bound(
        list.begin(), list.end(), lo,
        [&](const Vertex* v, const auto& k) { return key(v) < k; });
    for (; it != list.end() && key(*it) <= hi; ++it) {
      const Vertex& v = **it;
      const auto end = PolylineEndAt(s, v.pos, edge);
      if (end && *end == v.id) continue;
      if (!vertex_hits.insert({v.id, s.edge}).second) continue;
      std::ostringstream msg;
      msg << "vertex " << v.id << " at " << v.pos << " touches edge "
          << s.edge;
      report.violations.push_back(
          {ViolationKind::kPlanarity, {v.id}, {s.edge}, msg.str()});
    }
  }

  // Segment pairs.
  std::vector<int> by_xmin(segments.size());
  std::iota(by_xmin.begin(), by_xmin.end(), 0);
  std::sort(by_xmin.begin(), by_xmin.end(), [&](int i, int j) {
    return segments[i].xmin() < segments[j].xmin();
  });
  std::set<std::pair<int, int>> crossing_pairs;  // edge indices
  for (size_t p = 0; p < by_xmin.size(); ++p) {
    const Segment& s = segments[by_xmin[p]];
    for (size_t q = p + 1; q < by_xmin.size(); ++q) {
      const Segment& t = segments[by_xmin[q]];
      if (t.xmin() > s.xmax()) break;
      if (t.ymin() > s.ymax() || s.ymin() > t.ymax()) continue;
      if (s.edge_index == t.edge_index && std::abs(s.index - t.index) == 1) {
        continue;
      }
      const Coord x0 = std::max(s.xmin(), t.xmin());
      const Coord x1 = std::min(s.xmax(), t.xmax());
      const Coord y0 = std::max(s.ymin(), t.ymin());
      const Coord y1 = std::min(s.ymax(), t.ymax());
      if (x0 == x1 && y0 == y1) {
        const GridPoint point{x0, y0};
        const auto end_s = PolylineEndAt(s, point, drawing.edges[s.edge_index]);
        const auto end_t = PolylineEndAt(t, point, drawing.edges[t.edge_index]);
        if (end_s && end_t && *end_s == *end_t) continue;
      }
      const auto key = std::minmax(s.edge_index, t.edge_index);
      if (!crossing_pairs.insert(key).second) continue;
      const EdgeId e1 = drawing.edges[key.first].id;
      const EdgeId e2 = drawing.edges[key.second].id;
      std::ostringstream msg;
      if (e1 == e2) {
        msg << "edge " << e1 << " intersects itself near "
            << GridPoint{x0, y0};
      } else {
        msg << "edges " << e1 << " and " << e2 << " intersect at "
            << GridPoint{x0, y0};
      }
      std::vector<EdgeId> ids = {e1};
      if (e2 != e1) ids.push_back(e2);
      report.violations.push_back(
          {ViolationKind::kPlanarity, {}, ids, msg.str()});
    }
  }
}

}  // namespace

ValidationReport Validate(const OrthoDrawing& drawing) {
  ValidationReport report;
  if (drawing.vertices.empty()) {
    report.violations.push_back(
        {ViolationKind::kEmpty, {}, {}, "drawing has no vertices"});
    return report;
  }

  std::unordered_map<VertexId, GridPoint> positions;
  for (const Vertex& v : drawing.vertices) {
    if (!positions.emplace(v.id, v.pos).second) {
      report.violations.push_back({ViolationKind::kDuplicateId,
                                   {v.id},
                                   {},
                                   "duplicate vertex id " +
                                       std::to_string(v.id)});
    }
  }
  std::set<EdgeId> edge_ids;
  for (const Edge& e : drawing.edges) {
    if (!edge_ids.insert(e.id).second) {
      report.violations.push_back({ViolationKind::kDuplicateId,
                                   {},
                                   {e.id},
                                   "duplicate edge id " +
                                       std::to_string(e.id)});
    }
  }

  std::map<VertexId, int> degree;
  std::map<VertexId, std::vector<std::pair<Direction, EdgeId>>> star;
  std::vector<Segment> segments;
  std::vector<int> parent(drawing.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::unordered_map<VertexId, int> slot;
  for (size_t i = 0; i < drawing.vertices.size(); ++i) {
    slot.emplace(drawing.vertices[i].id, static_cast<int>(i));
  }
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (size_t ei = 0; ei < drawing.edges.size(); ++ei) {
    const Edge& e = drawing.edges[ei];
    if (!positions.contains(e.source) || !positions.contains(e.target)) {
      report.violations.push_back(
          {ViolationKind::kUnknownVertex,
           {},
           {e.id},
           "edge " + std::to_string(e.id) + " references an unknown vertex"});
      continue;
    }
    ++degree[e.source];
    ++degree[e.target];
    const int a = find(slot[e.source]), b = find(slot[e.target]);
    if (a != b) parent[a] = b;

    const std::vector<GridPoint> points = PolylineWith(positions, e);
    bool geometry_ok = true;
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      if (!IsAxisStep(points[k], points[k + 1])) {
        std::ostringstream msg;
        msg << "edge " << e.id << " has a non-axis-parallel or zero-length "
            << "segment " << points[k] << "-" << points[k + 1];
        report.violations.push_back(
            {ViolationKind::kNonAxisSegment, {}, {e.id}, msg.str()});
        geometry_ok = false;
        break;
      }
    }
    if (geometry_ok) {
      for (size_t k = 1; k + 1 < points.size(); ++k) {
        const Direction in = DirectionBetween(points[k - 1], points[k]);
        const Direction out = DirectionBetween(points[k], points[k + 1]);
        if (IsVertical(in) == IsVertical(out)) {
          std::ostringstream msg;
          msg << "edge " << e.id << " does not turn by 90 degrees at "
              << points[k];
          report.violations.push_back({ViolationKind::kStraightOrReversedBend,
                                       {},
                                       {e.id},
                                       msg.str()});
          geometry_ok = false;
          break;
        }
      }
    }
    if (!geometry_ok) continue;

    const int count = static_cast<int>(points.size()) - 1;
    for (int k = 0; k < count; ++k) {
      segments.push_back(
          {points[k], points[k + 1], e.id, static_cast<int>(ei), k, count});
    }
    star[e.source].push_back({DirectionBetween(points[0], points[1]), e.id});
    star[e.target].push_back(
        {DirectionBetween(points[count], points[count - 1]), e.id});
  }

  for (const auto& [vertex, d] : degree) {
    if (d > 4) {
      report.violations.push_back({ViolationKind::kDegree,
                                   {vertex},
                                   {},
                                   "vertex " + std::to_string(vertex) +
                                       " has degree " + std::to_string(d)});
    }
  }
  for (auto& [vertex, ends] : star) {
    std::sort(ends.begin(), ends.end());
    std::vector<EdgeId> clashing;
    for (size_t k = 1; k < ends.size(); ++k) {
      if (ends[k].first == ends[k - 1].first) {
        if (clashing.empty() || clashing.back() != ends[k - 1].second) {
          clashing.push_back(ends[k - 1].second);
        }
        clashing.push_back(ends[k].second);
      }
    }
    if (!clashing.empty()) {
      report.violations.push_back(
          {ViolationKind::kStarGeometry,
           {vertex},
           clashing,
           "edges leave vertex " + std::to_string(vertex) +
               " in the same direction"});
    }
  }

  CheckPlanarity(drawing, segments, report);

  int components = 0;
  for (size_t i = 0; i < parent.size(); ++i) {
    components += find(static_cast<int>(i)) == static_cast<int>(i);
  }
  if (components > 1) {
    report.violations.push_back(
        {ViolationKind::kDisconnected,
         {},
         {},
         "drawing has " + std::to_string(components) + " components"});
  }
  return report;
}

void ValidateOrThrow(const OrthoDrawing& drawing) {
  const ValidationReport report = Validate(drawing);
  if (!report.ok()) throw InvalidDrawingError(report.ToString());
}

// ---------------------------------------------------------------------------
// Embedding

PlaneGraph BuildPlaneGraph(
    const OrthoDrawing& drawing, std::vector<VertexId>* node_vertex,
    std::vector<std::pair<EdgeId, int>>* segment_origin) {
  PlaneGraph graph;
  std::unordered_map<VertexId, int> node_of;
  for (const Vertex& v : drawing.vertices) {
    node_of[v.id] = graph.AddNode(v.pos);
    if (node_vertex) node_vertex->push_back(v.id);
  }
  for (const Edge& e : drawing.edges) {
    int previous = node_of.at(e.source);
    for (size_t k = 0; k <= e.bends.size(); ++k) {
      int next;
      if (k < e.bends.size()) {
        next = graph.AddNode(e.bends[k]);
        if (node_vertex) node_vertex->push_back(-1);
      } else {
        next = node_of.at(e.target);
      }
      graph.AddSegment(previous, next);
      if (segment_origin) {
        segment_origin->push_back({e.id, static_cast<int>(k)});
      }
      previous = next;
    }
  }
  return graph;
}

Embedding ComputeEmbedding(const OrthoDrawing& drawing) {
  Embedding embedding;
  embedding.graph = BuildPlaneGraph(drawing, &embedding.node_vertex,
                                    &embedding.segment_origin);
  PlaneFaces faces = embedding.graph.ComputeFaces();
  embedding.external_face = faces.external;
  embedding.dart_face = std::move(faces.dart_face);
  for (int f = 0; f < faces.size(); ++f) {
    embedding.faces.push_back({std::move(faces.boundary[f]),
                               f == faces.external, faces.quarter_turns[f]});
  }
  for (int node = 0; node < embedding.graph.num_nodes(); ++node) {
    if (embedding.node_vertex[node] < 0) continue;
    auto& directions = embedding.rotation[embedding.node_vertex[node]];
    for (Direction d : kAllDirections) {
      if (embedding.graph.Port(node, d) != -1) directions.push_back(d);
    }
  }
  return embedding;
}

// ---------------------------------------------------------------------------
// Star geometry and metrics

StarGeometry ComputeStarGeometry(const OrthoDrawing& drawing) {
  StarGeometry star;
  const auto positions = drawing.PositionsById();
  for (const Vertex& v : drawing.vertices) star.at[v.id];
  for (const Edge& e : drawing.edges) {
    const std::vector<GridPoint> points = PolylineWith(positions, e);
    const size_t n = points.size();
    star.at[e.source].push_back({e.id, DirectionBetween(points[0], points[1])});
    star.at[e.target].push_back(
        {e.id, DirectionBetween(points[n - 1], points[n - 2])});
  }
  for (auto& [id, ends] : star.at) std::sort(ends.begin(), ends.end());
  return star;
}

Metrics ComputeMetrics(const OrthoDrawing& drawing) {
  Metrics m;
  if (drawing.vertices.empty()) return m;
  Coord xmin = std::numeric_limits<Coord>::max(), ymin = xmin;
  Coord xmax = std::numeric_limits<Coord>::min(), ymax = xmax;
  auto extend = [&](GridPoint p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const Vertex& v : drawing.vertices) extend(v.pos);
  const auto positions = drawing.PositionsById();
  for (const Edge& e : drawing.edges) {
    const std::vector<GridPoint> points = PolylineWith(positions, e);
    Coord length = 0;
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      length += ManhattanDistance(points[k], points[k + 1]);
    }
    for (size_t k = 1; k + 1 < points.size(); ++k) {
      extend(points[k]);
      const bool turns =
          (points[k - 1].x == points[k].x) != (points[k].x == points[k + 1].x);
      m.bend_count += turns;
    }
    m.total_edge_length += length;
    m.max_edge_length = std::max(m.max_edge_length, length);
  }
  m.width = xmax - xmin;
  m.height = ymax - ymin;
  m.area = m.width * m.height;
  return m;
}

namespace {

template <typename Pick>
Coord AxisLength(const OrthoDrawing& drawing, Pick pick) {
  Coord total = 0;
  for (const auto& points : drawing.Polylines()) {
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      total += pick(points[k], points[k + 1]);
    }
  }
  return total;
}

}  // namespace

Coord VerticalLength(const OrthoDrawing& drawing) {
  return AxisLength(drawing, [](GridPoint a, GridPoint b) {
    return a.x == b.x ? std::abs(a.y - b.y) : Coord{0};
  });
}

Coord HorizontalLength(const OrthoDrawing& drawing) {
  return AxisLength(drawing, [](GridPoint a, GridPoint b) {
    return a.y == b.y ? std::abs(a.x - b.x) : Coord{0};
  });
}

std::map<EdgeId, Coord> HorizontalLengthByEdge(const OrthoDrawing& drawing) {
  std::map<EdgeId, Coord> result;
  const auto positions = drawing.PositionsById();
  for (const Edge& e : drawing.edges) {
    const std::vector<GridPoint> points = PolylineWith(positions, e);
    Coord total = 0;
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      if (points[k].y == points[k + 1].y) {
        total += std::abs(points[k].x - points[k + 1].x);
      }
    }
    result[e.id] = total;
  }
  return result;
}

}  // namespace orthocompact
