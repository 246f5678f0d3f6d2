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


#include "orthocompact/generate.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace orthocompact {

const char* GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kGrid:
      return "grid";
    case GeneratorKind::kComb:
      return "comb";
    case GeneratorKind::kStaircase:
      return "staircase";
    case GeneratorKind::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name) {
  for (GeneratorKind kind :
       {GeneratorKind::kGrid, GeneratorKind::kComb, GeneratorKind::kStaircase,
        GeneratorKind::kRandom}) {
    if (name == GeneratorKindName(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

class Builder {
 public:
  VertexId Vertex(Coord x, Coord y) {
    const auto [it, inserted] = ids_.insert({{x, y}, 0});
    if (inserted) {
      it->second = static_cast<VertexId>(drawing_.vertices.size());
      drawing_.vertices.push_back({it->second, {x, y}});
    }
    return it->second;
  }
  void Edge(VertexId u, VertexId v, std::vector<GridPoint> bends = {}) {
    const EdgeId id = static_cast<EdgeId>(drawing_.edges.size());
    drawing_.edges.push_back({id, u, v, std::move(bends)});
  }
  void Path(const std::vector<GridPoint>& points) {
    for (size_t k = 0; k + 1 < points.size(); ++k) {
      const VertexId u = Vertex(points[k].x, points[k].y);
      const VertexId v = Vertex(points[k + 1].x, points[k + 1].y);
      Edge(u, v);
    }
  }
  OrthoDrawing Take() { return std::move(drawing_); }

 private:
  std::map<GridPoint, VertexId> ids_;
  OrthoDrawing drawing_;
};

}  // namespace

OrthoDrawing GenerateGrid(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Builder b;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) b.Vertex(x, y);
  }
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const VertexId here = b.Vertex(x, y);
      if (x + 1 < n) b.Edge(here, b.Vertex(x + 1, y));
      if (y + 1 < n) b.Edge(here, b.Vertex(x, y + 1));
    }
  }
  return b.Take();
}

OrthoDrawing GenerateComb(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Coord m = std::max(1, n - 1);
  const Coord w = std::max(2, n - 1);
  Builder b;
  b.Path({{0, 0}, {1, 0}, {w, 0}});
  std::vector<GridPoint> right = {{w, 0}};
  for (Coord y = 1; y <= m; ++y) right.push_back({w, y});
  right.push_back({w, 2 * m});
  b.Path(right);
  b.Path({{w, 2 * m}, {1, 2 * m}, {0, 2 * m}});
  std::vector<GridPoint> left = {{0, 2 * m}};
  for (Coord y = 2 * m - 1; y >= m; --y) left.push_back({0, y});
  left.push_back({0, 0});
  b.Path(left);
  b.Path({{0, m}, {w, m}});
  return b.Take();
}

OrthoDrawing GenerateStaircase(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Builder b;
  // Lower staircase, one vertex per corner.
  std::vector<GridPoint> lower = {{0, 0}};
  for (Coord k = 0; k < n; ++k) {
    lower.push_back({2 * k + 2, 2 * k});
    if (k + 1 < n) lower.push_back({2 * k + 2, 2 * k + 2});
  }
  b.Path(lower);
  // Upper staircase, lower shifted by (-2, +2), closed back to the origin.
  const Coord top = 2 * n;
  std::vector<GridPoint> bends = {{top, top + 2}};
  for (Coord k = n; k >= 1; --k) {
    bends.push_back({2 * k - 2, 2 * k + 2});
    if (k > 1) bends.push_back({2 * k - 2, 2 * k});
  }
  const VertexId last = b.Vertex(lower.back().x, lower.back().y);
  b.Edge(last, b.Vertex(0, 0), bends);
  return b.Take();
}

namespace {

// Explicit modulo reduction keeps sequences identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Below(uint64_t bound) { return engine_() % bound; }
  bool Chance(int percent) {
    return Below(100) < static_cast<uint64_t>(percent);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

OrthoDrawing GenerateRandom(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Rng rng(seed);
  int side = 1;
  while (side * side < n) ++side;
  side += 1;

  // Grow a connected point set with a spanning tree.
  std::set<std::pair<int, int>> chosen = {{0, 0}};
  std::vector<std::pair<int, int>> order = {{0, 0}};
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> links;
  const int dx[4] = {0, 1, 0, -1};
  const int dy[4] = {1, 0, -1, 0};
  while (static_cast<int>(chosen.size()) < n) {
    const auto from = order[rng.Below(order.size())];
    const int d = static_cast<int>(rng.Below(4));
    const std::pair<int, int> to = {from.first + dx[d], from.second + dy[d]};
    if (to.first < 0 || to.second < 0 || to.first >= side ||
        to.second >= side || chosen.contains(to)) {
      continue;
    }
    chosen.insert(to);
    order.push_back(to);
    links.insert({std::min(from, to), std::max(from, to)});
  }
  // Extra lattice edges between chosen neighbours.
  for (const auto& p : order) {
    for (int d : {0, 1}) {
      const std::pair<int, int> q = {p.first + dx[d], p.second + dy[d]};
      if (chosen.contains(q) && rng.Chance(40)) {
        links.insert({std::min(p, q), std::max(p, q)});
      }
    }
  }

  // Stretch: every lattice gap becomes 1..3 grid units.
  std::vector<Coord> col(side), row(side);
  for (int i = 1; i < side; ++i) {
    col[i] = col[i - 1] + 1 + static_cast<Coord>(rng.Below(3));
    row[i] = row[i - 1] + 1 + static_cast<Coord>(rng.Below(3));
  }

  Builder b;
  for (const auto& p : order) b.Vertex(col[p.first], row[p.second]);
  OrthoDrawing drawing;
  {
    // Subdivide some long segments while emitting edges.
    std::vector<std::pair<GridPoint, GridPoint>> segments;
    for (const auto& [p, q] : links) {
      segments.push_back({{col[p.first], row[p.second]},
                          {col[q.first], row[q.second]}});
    }
    for (const auto& [a, c] : segments) {
      const Coord length = ManhattanDistance(a, c);
      if (length >= 2 && rng.Chance(30)) {
        const Coord step = 1 + static_cast<Coord>(rng.Below(length - 1));
        GridPoint mid = a;
        if (a.x == c.x) {
          mid.y += step;
        } else {
          mid.x += step;
        }
        b.Path({a, mid, c});
      } else {
        b.Path({a, c});
      }
    }
    drawing = b.Take();
  }

  // Smooth some degree-2 vertices into bends (or straight continuations).
  std::map<VertexId, int> degree;
  for (const Edge& e : drawing.edges) {
    ++degree[e.source];
    ++degree[e.target];
  }
  std::vector<VertexId> candidates;
  for (const auto& [v, d] : degree) {
    if (d == 2) candidates.push_back(v);
  }
  for (VertexId v : candidates) {
    if (!rng.Chance(50)) continue;
    std::vector<int> list;
    for (size_t i = 0; i < drawing.edges.size(); ++i) {
      if (drawing.edges[i].source == v) list.push_back(static_cast<int>(i));
      if (drawing.edges[i].target == v) list.push_back(static_cast<int>(i));
    }
    if (list.size() != 2 || list[0] == list[1]) continue;
    const Edge& e1 = drawing.edges[list[0]];
    const Edge& e2 = drawing.edges[list[1]];
    const VertexId a = e1.source == v ? e1.target : e1.source;
    const VertexId c = e2.source == v ? e2.target : e2.source;
    if (a == c) continue;
    std::vector<GridPoint> p1 = drawing.Polyline(e1);
    if (e1.source == v) std::reverse(p1.begin(), p1.end());
    std::vector<GridPoint> p2 = drawing.Polyline(e2);
    if (e2.target == v) std::reverse(p2.begin(), p2.end());
    p1.insert(p1.end(), p2.begin() + 1, p2.end());
    p1 = CanonicalPolyline(std::move(p1));
    Edge merged{e1.id, a, c, {p1.begin() + 1, p1.end() - 1}};
    const int drop = list[1];
    drawing.edges[list[0]] = std::move(merged);
    drawing.edges.erase(drawing.edges.begin() + drop);
    std::erase_if(drawing.vertices,
                  [v](const Vertex& x) { return x.id == v; });
  }

  // Compact ids.
  std::map<VertexId, VertexId> renumber;
  for (Vertex& v : drawing.vertices) {
    const VertexId id = static_cast<VertexId>(renumber.size());
    renumber[v.id] = id;
    v.id = id;
  }
  for (size_t i = 0; i < drawing.edges.size(); ++i) {
    Edge& e = drawing.edges[i];
    e.id = static_cast<EdgeId>(i);
    e.source = renumber.at(e.source);
    e.target = renumber.at(e.target);
  }
  return drawing;
}

OrthoDrawing Generate(GeneratorKind kind, int n, uint64_t seed) {
  switch (kind) {
    case GeneratorKind::kGrid:
      return GenerateGrid(n);
    case GeneratorKind::kComb:
      return GenerateComb(n);
    case GeneratorKind::kStaircase:
      return GenerateStaircase(n);
    case GeneratorKind::kRandom:
      return GenerateRandom(n, seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace orthocompact
