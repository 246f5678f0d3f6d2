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


#include "orthocompact/compact.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "orthocompact/errors.h"
#include "orthocompact/normalize.h"

namespace orthocompact {

const char* ModeName(Mode mode) {
  return mode == Mode::kTrad ? "trad" : "ff";
}

const char* AxisName(Axis axis) {
  return axis == Axis::kVertical ? "y" : "x";
}

std::set<std::pair<EdgeId, int>> MiddleSegments(const OrthoDrawing& drawing) {
  std::set<std::pair<EdgeId, int>> middle;
  for (const Edge& e : drawing.edges) {
    const std::vector<GridPoint> points = drawing.Polyline(e);
    const int segments = static_cast<int>(points.size()) - 1;
    for (int i = 1; i + 1 < segments; ++i) {
      const Direction before = DirectionBetween(points[i - 1], points[i]);
      const Direction here = DirectionBetween(points[i], points[i + 1]);
      const Direction after = DirectionBetween(points[i + 1], points[i + 2]);
      if (!IsVertical(here) || IsVertical(before) || IsVertical(after)) {
        continue;
      }
      const int first = TurnBetween(before, here);
      const int second = TurnBetween(here, after);
      if (first != 0 && first == -second) middle.insert({e.id, i});
    }
  }
  return middle;
}

namespace {

// The face covering the quadrant counter-clockwise of direction `d` at
// `node`: the face left of the first dart found scanning clockwise from d.
int SectorFace(const PlaneGraph& graph, const PlaneFaces& faces, int node,
               Direction d) {
  for (int k = 0; k < 4; ++k) {
    const int dart = graph.Port(node, Clockwise(d, k));
    if (dart != -1) return faces.dart_face[dart];
  }
  throw InternalError("isolated node in dissected drawing");
}

int UpwardDart(const PlaneGraph& graph, int segment) {
  const auto& ends = graph.endpoints(segment);
  return graph.position(ends[0]).y < graph.position(ends[1]).y
             ? 2 * segment
             : 2 * segment + 1;
}

BuiltNetwork BuildNetwork(const DissectedDrawing& dd, bool fled_five) {
  BuiltNetwork built;
  const PlaneGraph& graph = dd.graph;
  built.faces = graph.ComputeFaces();
  FlowNetwork& net = built.network;
  NetworkMap& map = built.map;
  for (int f = 0; f < built.faces.size(); ++f) {
    map.face_node.push_back(net.AddNode(0));
  }

  std::set<EdgeId> middle_normalized;
  if (fled_five) {
    const auto middle = MiddleSegments(Denormalize(dd.source));
    for (const auto& [id, origin] : dd.source.edge_origin) {
      if (middle.contains({origin.edge, origin.segment_index})) {
        middle_normalized.insert(id);
      }
    }
  }

  map.segment_arc.assign(graph.num_segments(), -1);
  for (int s = 0; s < graph.num_segments(); ++s) {
    if (!graph.IsVerticalSegment(s)) continue;
    const int up = UpwardDart(graph, s);
    const int left = map.face_node[built.faces.dart_face[up]];
    const int right = map.face_node[built.faces.dart_face[up ^ 1]];
    const bool original = dd.segment_kind[s] == SegmentKind::kOriginal;
    const bool middle = original && middle_normalized.contains(
                                        dd.segment_edge[s]);
    map.segment_arc[s] =
        net.AddArc(left, right, middle ? 0 : 1, kUnbounded, original ? 1 : 0);
    if (middle) map.middle_arcs.insert(map.segment_arc[s]);
  }

  if (fled_five) {
    for (const BendVertexRecord& bv : dd.bend_vertices) {
      const BendFaces f = FacesAround(dd, built.faces, bv.node);
      std::pair<int, int> arcs = {-1, -1};
      if (f.lower_left != f.upper_right) {
        arcs.first = net.AddArc(map.face_node[f.lower_left],
                                map.face_node[f.upper_right], 0, kUnbounded, 1);
      }
      if (f.upper_left != f.lower_right) {
        arcs.second = net.AddArc(map.face_node[f.upper_left],
                                 map.face_node[f.lower_right], 0, kUnbounded,
                                 1);
      }
      map.bend_arcs.push_back(arcs);
    }
  }
  return built;
}

}  // namespace

BendFaces FacesAround(const DissectedDrawing& dd, const PlaneFaces& faces,
                      int node) {
  const PlaneGraph& g = dd.graph;
  return {SectorFace(g, faces, node, Direction::kNorth),
          SectorFace(g, faces, node, Direction::kEast),
          SectorFace(g, faces, node, Direction::kSouth),
          SectorFace(g, faces, node, Direction::kWest)};
}

BuiltNetwork BuildTradNetwork(const DissectedDrawing& dd) {
  return BuildNetwork(dd, false);
}

BuiltNetwork BuildFfNetwork(const DissectedDrawing& dd) {
  return BuildNetwork(dd, true);
}

Flow InitialFlow(const DissectedDrawing& dd, const BuiltNetwork& built) {
  Flow flow;
  flow.arc_flow.assign(built.network.num_arcs(), 0);
  for (int s = 0; s < dd.graph.num_segments(); ++s) {
    const int arc = built.map.segment_arc[s];
    if (arc == -1) continue;
    const auto& ends = dd.graph.endpoints(s);
    flow.arc_flow[arc] = std::abs(dd.graph.position(ends[0]).y -
                                  dd.graph.position(ends[1]).y);
  }
  flow.total_cost = FlowCost(built.network, flow.arc_flow);
  return flow;
}

Realization Realize(const DissectedDrawing& dd, const Flow& flow,
                    const NetworkMap& map) {
  const PlaneGraph& graph = dd.graph;
  const int n = graph.num_nodes();
  auto arc_flow = [&](int arc) -> FlowQuantity {
    return arc == -1 ? 0 : flow.arc_flow[arc];
  };

  // Bend vertex k owns points node (left copy) and n + k (right copy).
  std::vector<int> bend_index(n, -1);
  std::vector<Coord> rise(dd.bend_vertices.size(), 0);  // y(right) - y(left)
  for (size_t k = 0; k < dd.bend_vertices.size(); ++k) {
    bend_index[dd.bend_vertices[k].node] = static_cast<int>(k);
    const auto [up, down] = map.bend_arcs.empty()
                                ? std::pair(-1, -1)
                                : map.bend_arcs[k];
    rise[k] = arc_flow(down) - arc_flow(up);
  }
  const int num_points = n + static_cast<int>(dd.bend_vertices.size());
  auto left_copy = [&](int node) { return node; };
  auto right_copy = [&](int node) {
    return bend_index[node] == -1 ? node : n + bend_index[node];
  };
  auto upper_copy = [&](int node) {
    const int k = bend_index[node];
    return k != -1 && rise[k] > 0 ? right_copy(node) : left_copy(node);
  };
  auto lower_copy = [&](int node) {
    const int k = bend_index[node];
    return k != -1 && rise[k] < 0 ? right_copy(node) : left_copy(node);
  };

  // y[to] = y[from] + delta
  std::vector<std::vector<std::pair<int, Coord>>> constraints(num_points);
  auto relate = [&](int from, int to, Coord delta) {
    constraints[from].push_back({to, delta});
    constraints[to].push_back({from, -delta});
  };
  Coord vertical_length = 0;
  for (int s = 0; s < graph.num_segments(); ++s) {
    const auto& ends = graph.endpoints(s);
    const int a = ends[0], b = ends[1];
    if (graph.IsVerticalSegment(s)) {
      const bool a_low = graph.position(a).y < graph.position(b).y;
      const int lo = a_low ? a : b, hi = a_low ? b : a;
      const Coord length = arc_flow(map.segment_arc[s]);
      relate(upper_copy(lo), lower_copy(hi), length);
      if (dd.segment_kind[s] == SegmentKind::kOriginal) {
        vertical_length += length;
      }
    } else {
      const bool a_left = graph.position(a).x < graph.position(b).x;
      const int l = a_left ? a : b, r = a_left ? b : a;
      relate(right_copy(l), left_copy(r), 0);
    }
  }
  for (size_t k = 0; k < dd.bend_vertices.size(); ++k) {
    const int node = dd.bend_vertices[k].node;
    relate(left_copy(node), right_copy(node), rise[k]);
    vertical_length += std::abs(rise[k]);
  }

  std::vector<std::optional<Coord>> y(num_points);
  for (int start = 0; start < num_points; ++start) {
    if (y[start]) continue;
    if (start != 0) {
      throw InternalError("dissected drawing is not connected");
    }
    y[start] = 0;
    std::deque<int> queue = {start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, delta] : constraints[u]) {
        const Coord want = *y[u] + delta;
        if (!y[v]) {
          y[v] = want;
          queue.push_back(v);
        } else if (*y[v] != want) {
          throw InternalError("flow does not induce consistent coordinates");
        }
      }
    }
  }

  // Rebuild a normalized drawing; jogs at bend vertices become new dummies.
  const NormalizedDrawing& source = dd.source;
  NormalizedDrawing out;
  std::unordered_map<VertexId, int> vertex_node;
  for (int node = 0; node < n; ++node) {
    if (dd.node_vertex[node] != -1) vertex_node[dd.node_vertex[node]] = node;
  }
  for (const Vertex& v : source.drawing.vertices) {
    const int node = vertex_node.at(v.id);
    out.drawing.vertices.push_back({v.id, {v.pos.x, *y[node]}});
  }
  out.bend_origin = source.bend_origin;
  VertexId next_vertex = source.drawing.NextVertexId();
  EdgeId next_edge = 0;

  std::vector<int> order(source.drawing.edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto origin_of = [&](int i) {
    const SegmentOrigin& o =
        source.edge_origin.at(source.drawing.edges[i].id);
    return std::pair(o.edge, o.segment_index);
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return origin_of(a) < origin_of(b);
  });
  std::map<EdgeId, int> piece_count;
  for (int i : order) {
    const Edge& e = source.drawing.edges[i];
    const EdgeId host = origin_of(i).first;
    const std::vector<int>& chain = dd.edge_chain[i];
    std::vector<std::pair<GridPoint, VertexId>> points;
    points.push_back({{graph.position(chain.front()).x, *y[chain.front()]},
                      e.source});
    const bool rightwards =
        graph.position(chain.front()).x < graph.position(chain.back()).x;
    for (size_t k = 1; k + 1 < chain.size(); ++k) {
      const int node = chain[k];
      const int b = bend_index[node];
      if (b == -1 || rise[b] == 0) continue;
      const Coord x = graph.position(node).x;
      const int first = rightwards ? left_copy(node) : right_copy(node);
      const int second = rightwards ? right_copy(node) : left_copy(node);
      for (int p : {first, second}) {
        const VertexId id = next_vertex++;
        out.drawing.vertices.push_back({id, {x, *y[p]}});
        out.bend_origin[id] = {host, -1};
        points.push_back({{x, *y[p]}, id});
      }
    }
    points.push_back({{graph.position(chain.back()).x, *y[chain.back()]},
                      e.target});
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      const EdgeId id = next_edge++;
      out.drawing.edges.push_back(
          {id, points[k].second, points[k + 1].second, {}});
      out.edge_origin[id] = {host, piece_count[host]++};
    }
  }

  Realization result;
  result.drawing = StripEmptyRows(Denormalize(out));
  result.vertical_length = vertical_length;
  return result;
}

StepResult CompactStepDetailed(const OrthoDrawing& drawing, Mode mode,
                               Axis axis, int spacing) {
  ValidateOrThrow(drawing);
  const bool transpose = axis == Axis::kHorizontal;
  const OrthoDrawing frame = transpose ? Transposed(drawing) : drawing;
  const NormalizedDrawing nd = Normalize(frame);
  std::vector<BendVertexSite> sites;
  if (mode == Mode::kFf) sites = InsertBendVertices(nd, std::max(spacing, 1));
  const DissectedDrawing dd = VerticalDissect(nd, sites, true);
  BuiltNetwork built =
      mode == Mode::kFf ? BuildFfNetwork(dd) : BuildTradNetwork(dd);
  const Flow initial = InitialFlow(dd, built);

  StepResult result;
  const auto start = std::chrono::steady_clock::now();
  result.flow = SolveMinCost(built.network, initial.arc_flow);
  result.solve_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  Realization realized = Realize(dd, result.flow, built.map);
  const ValidationReport report = Validate(realized.drawing);
  if (!report.ok()) {
    throw InternalError("compaction produced an invalid drawing: " +
                        report.ToString());
  }
  result.drawing =
      transpose ? Transposed(std::move(realized.drawing)) : realized.drawing;
  result.network = std::move(built.network);
  result.realized_vertical_length = realized.vertical_length;
  std::tie(result.dissection_nodes, result.dissection_segments) =
      DissectionSize(dd);
  result.visibility_segments = dd.CountSegments(SegmentKind::kVisibility);
  result.bend_vertices = static_cast<int>(dd.bend_vertices.size());
  return result;
}

OrthoDrawing CompactStep(const OrthoDrawing& drawing, Mode mode, Axis axis,
                         int spacing) {
  return CompactStepDetailed(drawing, mode, axis, spacing).drawing;
}

}  // namespace orthocompact
