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

#include "orthocompact/dissect.h"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "orthocompact/errors.h"

namespace orthocompact {

std::vector<BendVertexSite> InsertBendVertices(const NormalizedDrawing& nd,
                                               int spacing) {
  if (spacing < 1) throw std::invalid_argument("spacing must be positive");
  std::vector<BendVertexSite> sites;
  const auto positions = nd.drawing.PositionsById();
  for (const Edge& e : nd.drawing.edges) {
    const GridPoint a = positions.at(e.source);
    const GridPoint b = positions.at(e.target);
    if (a.y != b.y) continue;
    const Coord left = std::min(a.x, b.x);
    const Coord right = std::max(a.x, b.x);
    const EdgeId host = nd.edge_origin.at(e.id).edge;
    for (Coord x = left + spacing; x < right; x += spacing) {
      sites.push_back({e.id, host, {x, a.y}});
    }
  }
  return sites;
}

int DissectedDrawing::CountSegments(SegmentKind kind) const {
  return static_cast<int>(
      std::count(segment_kind.begin(), segment_kind.end(), kind));
}

namespace {

struct HorizontalRun {
  Coord xmin;
  Coord xmax;
  Coord y;
  int edge_index;
};

// Quarter turns of the angle at a node that contains the free direction
// `d`, measured between the two darts bounding it.
int GapAround(const std::array<bool, 4>& occupied, Direction d) {
  int cw = 1;
  while (cw < 4 && !occupied[Index(Clockwise(d, cw))]) ++cw;
  int ccw = 1;
  while (ccw < 4 && !occupied[Index(Clockwise(d, -ccw))]) ++ccw;
  return cw + ccw;
}

}  // namespace

DissectedDrawing VerticalDissect(const NormalizedDrawing& nd,
                                 std::span<const BendVertexSite> bend_vertices,
                                 bool bend_vertices_as_reflex) {
  DissectedDrawing dd;
  dd.source = nd;
  const OrthoDrawing& drawing = nd.drawing;
  PlaneGraph& graph = dd.graph;

  std::unordered_map<VertexId, int> node_of;
  for (const Vertex& v : drawing.vertices) {
    node_of[v.id] = graph.AddNode(v.pos);
    dd.node_kind.push_back(nd.IsDummy(v.id) ? NodeKind::kBendDummy
                                            : NodeKind::kOriginal);
    dd.node_vertex.push_back(v.id);
  }
  std::vector<std::array<bool, 4>> occupied(graph.num_nodes(),
                                            {false, false, false, false});
  std::unordered_map<EdgeId, int> edge_index;
  std::vector<HorizontalRun> runs;
  for (size_t i = 0; i < drawing.edges.size(); ++i) {
    const Edge& e = drawing.edges[i];
    edge_index[e.id] = static_cast<int>(i);
    const int a = node_of.at(e.source), b = node_of.at(e.target);
    const GridPoint pa = graph.position(a), pb = graph.position(b);
    const Direction d = DirectionBetween(pa, pb);
    occupied[a][Index(d)] = true;
    occupied[b][Index(Opposite(d))] = true;
    if (pa.y == pb.y) {
      runs.push_back({std::min(pa.x, pb.x), std::max(pa.x, pb.x), pa.y,
                      static_cast<int>(i)});
    }
  }

  // Interior nodes of each normalized edge: (x, node).
  std::vector<std::vector<std::pair<Coord, int>>> interior(
      drawing.edges.size());
  for (const BendVertexSite& site : bend_vertices) {
    const int node = graph.AddNode(site.pos);
    dd.node_kind.push_back(NodeKind::kBendVertex);
    dd.node_vertex.push_back(-1);
    dd.bend_vertices.push_back(
        {node, site.host_edge, site.normalized_edge, site.pos.x});
    interior[edge_index.at(site.normalized_edge)].push_back(
        {site.pos.x, node});
  }
  const int num_blocking_nodes = graph.num_nodes();

  struct Ray {
    int node;
    bool up;
  };
  std::vector<Ray> rays;
  for (int node = 0; node < num_blocking_nodes; ++node) {
    if (dd.node_kind[node] == NodeKind::kBendVertex) {
      if (bend_vertices_as_reflex) {
        rays.push_back({node, true});
        rays.push_back({node, false});
      }
      continue;
    }
    for (Direction d : {Direction::kNorth, Direction::kSouth}) {
      if (occupied[node][Index(d)]) continue;
      if (GapAround(occupied[node], d) >= 3) {
        rays.push_back({node, d == Direction::kNorth});
      }
    }
  }

  // Column sweep. Nodes grouped by x and sorted by y; horizontal runs enter
  // the active set at their left end and leave after their right end.
  std::map<Coord, std::vector<int>> columns;
  for (int node = 0; node < num_blocking_nodes; ++node) {
    columns[graph.position(node).x].push_back(node);
  }
  for (auto& [x, nodes] : columns) {
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
      return graph.position(a).y < graph.position(b).y;
    });
  }
  std::map<Coord, std::vector<Ray>> rays_by_column;
  for (const Ray& r : rays) {
    rays_by_column[graph.position(r.node).x].push_back(r);
  }

  std::vector<int> by_left(runs.size());
  for (size_t i = 0; i < runs.size(); ++i) by_left[i] = static_cast<int>(i);
  std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
    return std::pair(runs[a].xmin, runs[a].y) <
           std::pair(runs[b].xmin, runs[b].y);
  });
  using Expiry = std::pair<Coord, int>;
  std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiring;
  std::map<Coord, int> active;  // y -> run
  size_t next_run = 0;

  // Ray targets: either an existing node or a point inside a run.
  struct Hit {
    int from;
    int to_node;  // -1 when the ray lands inside `run`
    int run;
    Coord x;
  };
  std::vector<Hit> hits;

  for (const auto& [x, column_rays] : rays_by_column) {
    while (next_run < by_left.size() && runs[by_left[next_run]].xmin <= x) {
      const int r = by_left[next_run++];
      active[runs[r].y] = r;
      expiring.push({runs[r].xmax, r});
    }
    while (!expiring.empty() && expiring.top().first < x) {
      const int r = expiring.top().second;
      expiring.pop();
      auto it = active.find(runs[r].y);
      if (it != active.end() && it->second == r) active.erase(it);
    }
    const std::vector<int>& nodes = columns.at(x);
    for (const Ray& ray : column_rays) {
      const Coord y = graph.position(ray.node).y;
      const auto self = std::find(nodes.begin(), nodes.end(), ray.node);
      int node_hit = -1;
      if (ray.up && self + 1 != nodes.end()) node_hit = *(self + 1);
      if (!ray.up && self != nodes.begin()) node_hit = *(self - 1);
      int run_hit = -1;
      if (ray.up) {
        auto it = active.upper_bound(y);
        if (it != active.end()) run_hit = it->second;
      } else {
        auto it = active.lower_bound(y);
        if (it != active.begin()) run_hit = std::prev(it)->second;
      }
      if (run_hit != -1 && node_hit != -1) {
        const Coord node_y = graph.position(node_hit).y;
        const Coord run_y = runs[run_hit].y;
        const bool node_first = ray.up ? node_y <= run_y : node_y >= run_y;
        if (node_first) run_hit = -1;
      }
      if (run_hit != -1) {
        const HorizontalRun& run = runs[run_hit];
        if (!(run.xmin < x && x < run.xmax)) {
          throw InternalError("visibility ray ends at a run endpoint");
        }
        hits.push_back({ray.node, -1, run_hit, x});
      } else if (node_hit != -1) {
        hits.push_back({ray.node, node_hit, -1, x});
      }
      // Otherwise the ray escapes into the unbounded face.
    }
  }

  // Split nodes, created in (x, y) order.
  std::vector<std::pair<int, Coord>> split_keys;  // (run, x)
  for (const Hit& h : hits) {
    if (h.to_node == -1) split_keys.push_back({h.run, h.x});
  }
  std::sort(split_keys.begin(), split_keys.end(),
            [&](const auto& a, const auto& b) {
              return std::pair(a.second, runs[a.first].y) <
                     std::pair(b.second, runs[b.first].y);
            });
  split_keys.erase(std::unique(split_keys.begin(), split_keys.end()),
                   split_keys.end());
  std::map<std::pair<int, Coord>, int> split_node;
  for (const auto& key : split_keys) {
    const HorizontalRun& run = runs[key.first];
    const int node = graph.AddNode({key.second, run.y});
    dd.node_kind.push_back(NodeKind::kSplitDummy);
    dd.node_vertex.push_back(-1);
    split_node[key] = node;
    interior[run.edge_index].push_back({key.second, node});
  }

  // Original segments, split at interior nodes.
  dd.edge_chain.resize(drawing.edges.size());
  for (size_t i = 0; i < drawing.edges.size(); ++i) {
    const Edge& e = drawing.edges[i];
    const int a = node_of.at(e.source), b = node_of.at(e.target);
    auto& inner = interior[i];
    std::sort(inner.begin(), inner.end());
    if (graph.position(a).x > graph.position(b).x) {
      std::reverse(inner.begin(), inner.end());
    }
    std::vector<int>& chain = dd.edge_chain[i];
    chain.push_back(a);
    for (const auto& [x, node] : inner) chain.push_back(node);
    chain.push_back(b);
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      graph.AddSegment(chain[k], chain[k + 1]);
      dd.segment_kind.push_back(SegmentKind::kOriginal);
      dd.segment_edge.push_back(e.id);
    }
  }

  // Visibility segments, oriented upwards and deduplicated.
  std::set<std::tuple<Coord, Coord, int, int>> visibility;  // x, ylow, lo, hi
  for (const Hit& h : hits) {
    const int target =
        h.to_node != -1 ? h.to_node : split_node.at({h.run, h.x});
    int lo = h.from, hi = target;
    if (graph.position(lo).y > graph.position(hi).y) std::swap(lo, hi);
    visibility.insert({h.x, graph.position(lo).y, lo, hi});
  }
  for (const auto& [x, y, lo, hi] : visibility) {
    graph.AddSegment(lo, hi);
    dd.segment_kind.push_back(SegmentKind::kVisibility);
    dd.segment_edge.push_back(-1);
  }
  return dd;
}

std::pair<int, int> DissectionSize(const DissectedDrawing& dd) {
  return {dd.graph.num_nodes(), dd.graph.num_segments()};
}

}  // namespace orthocompact
