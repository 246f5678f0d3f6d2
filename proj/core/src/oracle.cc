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


#include "orthocompact/oracle.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orthocompact/errors.h"

namespace orthocompact {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

struct LevelSearch {
  int num_levels = 0;
  Coord bound = 0;
  // Per level: (other level, +1 if this level is the upper end).
  std::vector<std::vector<std::pair<int, int>>> links;
  std::vector<Coord> min_value;
  std::vector<Coord> max_value;
  std::vector<int> order;
  int num_links = 0;

  // Candidate drawings are assembled and validated by the caller.
  std::function<bool(const std::vector<Coord>&)> accept;

  std::vector<std::optional<Coord>> value;
  Coord best = 0;
  std::vector<Coord> best_values;

  void Search(size_t i, Coord cost, int fixed_links) {
    if (cost + (num_links - fixed_links) >= best) return;
    if (i == order.size()) {
      std::vector<Coord> values(num_levels);
      for (int c = 0; c < num_levels; ++c) values[c] = *value[c];
      if (accept(values)) {
        best = cost;
        best_values = std::move(values);
      }
      return;
    }
    const int c = order[i];
    Coord low = min_value[c], high = max_value[c];
    for (const auto& [other, upper] : links[c]) {
      if (!value[other]) continue;
      if (upper > 0) {
        low = std::max(low, *value[other] + 1);
      } else {
        high = std::min(high, *value[other] - 1);
      }
    }
    for (Coord v = low; v <= high; ++v) {
      Coord added = 0;
      int newly_fixed = 0;
      for (const auto& [other, upper] : links[c]) {
        if (!value[other]) continue;
        added += upper > 0 ? v - *value[other] : *value[other] - v;
        ++newly_fixed;
      }
      value[c] = v;
      Search(i + 1, cost + added, fixed_links + newly_fixed);
      value[c].reset();
    }
  }
};

}  // namespace

OracleResult OracleTradVertical(const OrthoDrawing& input,
                                Coord y_range_bound) {
  ValidateOrThrow(input);
  OrthoDrawing drawing = input;
  const Metrics metrics = ComputeMetrics(drawing);
  Coord min_y = std::numeric_limits<Coord>::max();
  for (const auto& polyline : drawing.Polylines()) {
    for (const GridPoint& p : polyline) min_y = std::min(min_y, p.y);
  }
  for (const Vertex& v : drawing.vertices) min_y = std::min(min_y, v.pos.y);
  for (Vertex& v : drawing.vertices) v.pos.y -= min_y;
  for (Edge& e : drawing.edges) {
    for (GridPoint& b : e.bends) b.y -= min_y;
  }
  const Coord bound = y_range_bound < 0 ? metrics.height : y_range_bound;
  if (bound > kOracleMaxRange) {
    throw OracleRefusedError("y range " + std::to_string(bound) +
                             " exceeds the oracle limit");
  }

  // Points: vertices first, then bends in edge order.
  std::map<VertexId, int> vertex_point;
  std::vector<GridPoint> point_pos;
  for (const Vertex& v : drawing.vertices) {
    vertex_point[v.id] = static_cast<int>(point_pos.size());
    point_pos.push_back(v.pos);
  }
  std::vector<std::vector<int>> edge_points;
  for (const Edge& e : drawing.edges) {
    std::vector<int> ids = {vertex_point.at(e.source)};
    for (const GridPoint& b : e.bends) {
      ids.push_back(static_cast<int>(point_pos.size()));
      point_pos.push_back(b);
    }
    ids.push_back(vertex_point.at(e.target));
    edge_points.push_back(std::move(ids));
  }
  DisjointSets sets(static_cast<int>(point_pos.size()));
  std::vector<std::pair<int, int>> verticals;  // (lower point, upper point)
  for (const auto& ids : edge_points) {
    for (size_t k = 0; k + 1 < ids.size(); ++k) {
      const GridPoint a = point_pos[ids[k]], b = point_pos[ids[k + 1]];
      if (a.y == b.y) {
        sets.Union(ids[k], ids[k + 1]);
      } else {
        verticals.push_back(a.y < b.y ? std::pair(ids[k], ids[k + 1])
                                      : std::pair(ids[k + 1], ids[k]));
      }
    }
  }
  std::map<int, int> level_of_root;
  std::vector<int> point_level(point_pos.size());
  for (size_t p = 0; p < point_pos.size(); ++p) {
    const int root = sets.Find(static_cast<int>(p));
    auto [it, inserted] =
        level_of_root.insert({root, static_cast<int>(level_of_root.size())});
    point_level[p] = it->second;
  }

  LevelSearch search;
  search.num_levels = static_cast<int>(level_of_root.size());
  if (search.num_levels > kOracleMaxLevels) {
    throw OracleRefusedError(std::to_string(search.num_levels) +
                             " horizontal lines exceed the oracle limit");
  }
  search.bound = bound;
  search.links.resize(search.num_levels);
  for (const auto& [lo, hi] : verticals) {
    const int a = point_level[lo], b = point_level[hi];
    search.links[a].push_back({b, -1});
    search.links[b].push_back({a, +1});
  }
  search.num_links = static_cast<int>(verticals.size());

  // Longest chains of strict constraints below and above each level.
  const int n = search.num_levels;
  search.min_value.assign(n, 0);
  search.max_value.assign(n, bound);
  for (int round = 0; round < n; ++round) {
    for (int c = 0; c < n; ++c) {
      for (const auto& [other, upper] : search.links[c]) {
        if (upper > 0) {
          search.min_value[c] =
              std::max(search.min_value[c], search.min_value[other] + 1);
        } else {
          search.max_value[c] =
              std::min(search.max_value[c], search.max_value[other] - 1);
        }
      }
    }
  }

  // Breadth-first order keeps each new level linked to assigned ones.
  std::vector<bool> queued(n, false);
  for (int start = 0; start < n; ++start) {
    if (queued[start]) continue;
    queued[start] = true;
    std::deque<int> queue = {start};
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      search.order.push_back(c);
      for (const auto& [other, upper] : search.links[c]) {
        if (!queued[other]) {
          queued[other] = true;
          queue.push_back(other);
        }
      }
    }
  }

  auto assemble = [&](const std::vector<Coord>& values) {
    OrthoDrawing out = drawing;
    for (Vertex& v : out.vertices) {
      v.pos.y = values[point_level[vertex_point.at(v.id)]];
    }
    for (size_t e = 0; e < out.edges.size(); ++e) {
      for (size_t k = 0; k < out.edges[e].bends.size(); ++k) {
        out.edges[e].bends[k].y = values[point_level[edge_points[e][k + 1]]];
      }
    }
    return out;
  };
  search.accept = [&](const std::vector<Coord>& values) {
    return Validate(assemble(values)).ok();
  };

  std::vector<Coord> input_values(n);
  for (size_t p = 0; p < point_pos.size(); ++p) {
    input_values[point_level[p]] = point_pos[p].y;
  }
  search.best = VerticalLength(drawing);
  search.best_values = input_values;
  search.value.assign(n, std::nullopt);
  search.Search(0, 0, 0);

  OracleResult result;
  result.optimum = search.best;
  result.witness = assemble(search.best_values);
  return result;
}

CostValue OracleCirculation(const FlowNetwork& net, FlowQuantity value_cap) {
  if (net.num_arcs() > kOracleMaxArcs || value_cap > kOracleMaxValue) {
    throw OracleRefusedError("network exceeds the circulation oracle limits");
  }
  const int n = net.num_nodes();
  const int m = net.num_arcs();
  // Nodes whose balance is final once arc i is assigned.
  std::vector<std::vector<int>> settled(m + 1);
  std::vector<int> last(n, -1);
  for (int a = 0; a < m; ++a) {
    last[net.arcs[a].tail] = a;
    last[net.arcs[a].head] = a;
  }
  for (int k = 0; k < n; ++k) {
    if (last[k] == -1) {
      if (net.demand[k] != 0) throw InfeasibleError("isolated demand node");
    } else {
      settled[last[k]].push_back(k);
    }
  }
  std::vector<FlowQuantity> balance(n, 0);
  std::optional<CostValue> best;
  std::function<void(int, CostValue)> assign = [&](int a, CostValue cost) {
    if (a == m) {
      if (!best || cost < *best) best = cost;
      return;
    }
    const FlowArc& arc = net.arcs[a];
    const FlowQuantity high = std::min(arc.upper, value_cap);
    for (FlowQuantity x = arc.lower; x <= high; ++x) {
      balance[arc.tail] += x;
      balance[arc.head] -= x;
      bool ok = true;
      for (int k : settled[a]) ok = ok && balance[k] == net.demand[k];
      if (ok) assign(a + 1, cost + x * arc.cost);
      balance[arc.tail] -= x;
      balance[arc.head] += x;
    }
  };
  assign(0, 0);
  if (!best) throw InfeasibleError("no flow within the value cap");
  return *best;
}

}  // namespace orthocompact
