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

#include "orthocompact/normalize.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "orthocompact/errors.h"

namespace orthocompact {

NormalizedDrawing Normalize(const OrthoDrawing& drawing) {
  NormalizedDrawing out;
  out.drawing.vertices = drawing.vertices;
  VertexId next_vertex = drawing.NextVertexId();
  EdgeId next_edge = 0;
  for (const Edge& e : drawing.edges) {
    VertexId previous = e.source;
    for (size_t k = 0; k <= e.bends.size(); ++k) {
      VertexId next;
      if (k < e.bends.size()) {
        next = next_vertex++;
        out.drawing.vertices.push_back({next, e.bends[k]});
        out.bend_origin[next] = {e.id, static_cast<int>(k)};
      } else {
        next = e.target;
      }
      const EdgeId id = next_edge++;
      out.drawing.edges.push_back({id, previous, next, {}});
      out.edge_origin[id] = {e.id, static_cast<int>(k)};
      previous = next;
    }
  }
  return out;
}

OrthoDrawing Denormalize(const NormalizedDrawing& normalized) {
  const OrthoDrawing& nd = normalized.drawing;
  const auto positions = nd.PositionsById();

  // Original edges in order of first appearance.
  std::vector<EdgeId> order;
  std::map<EdgeId, std::vector<std::pair<int, const Edge*>>> pieces;
  for (const Edge& e : nd.edges) {
    const auto origin = normalized.edge_origin.find(e.id);
    if (origin == normalized.edge_origin.end()) {
      throw InvalidDrawingError("normalized edge " + std::to_string(e.id) +
                                " has no origin");
    }
    auto& list = pieces[origin->second.edge];
    if (list.empty()) order.push_back(origin->second.edge);
    list.push_back({origin->second.segment_index, &e});
  }

  OrthoDrawing out;
  for (const Vertex& v : nd.vertices) {
    if (!normalized.IsDummy(v.id)) out.vertices.push_back(v);
  }
  for (EdgeId id : order) {
    auto& list = pieces[id];
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Edge edge{id, list.front().second->source, list.back().second->target, {}};
    std::vector<GridPoint> points = {positions.at(edge.source)};
    VertexId at = edge.source;
    for (const auto& [index, piece] : list) {
      if (piece->source != at) {
        throw InvalidDrawingError("segments of edge " + std::to_string(id) +
                                  " do not form a chain");
      }
      const GridPoint p = positions.at(piece->target);
      at = piece->target;
      if (p == points.back()) continue;
      if (points.size() >= 2) {
        const GridPoint a = points[points.size() - 2];
        const GridPoint b = points.back();
        const Direction in = DirectionBetween(a, b);
        const Direction out_dir = DirectionBetween(b, p);
        if (in == out_dir) {
          points.back() = p;
          continue;
        }
        if (in == Opposite(out_dir)) {
          std::ostringstream msg;
          msg << "edge " << id << " folds back on itself at " << b;
          throw InvalidDrawingError(msg.str());
        }
      }
      points.push_back(p);
    }
    if (points.size() < 2) {
      throw InvalidDrawingError("edge " + std::to_string(id) +
                                " collapses to a point");
    }
    edge.bends.assign(points.begin() + 1, points.end() - 1);
    out.edges.push_back(std::move(edge));
  }
  return out;
}

namespace {

OrthoDrawing Compress(const OrthoDrawing& drawing, bool columns, bool rows) {
  std::vector<Coord> xs, ys;
  auto collect = [&](GridPoint p) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  };
  for (const Vertex& v : drawing.vertices) collect(v.pos);
  for (const Edge& e : drawing.edges) {
    for (const GridPoint& b : e.bends) collect(b);
  }
  for (auto* values : {&xs, &ys}) {
    std::sort(values->begin(), values->end());
    values->erase(std::unique(values->begin(), values->end()), values->end());
  }
  auto rank = [](const std::vector<Coord>& values, Coord c) {
    return static_cast<Coord>(
        std::lower_bound(values.begin(), values.end(), c) - values.begin());
  };
  auto remap = [&](GridPoint p) {
    if (columns) p.x = rank(xs, p.x);
    if (rows) p.y = rank(ys, p.y);
    return p;
  };
  OrthoDrawing out = drawing;
  for (Vertex& v : out.vertices) v.pos = remap(v.pos);
  for (Edge& e : out.edges) {
    for (GridPoint& b : e.bends) b = remap(b);
  }
  return out;
}

}  // namespace

OrthoDrawing StripEmptyGridLines(const OrthoDrawing& drawing) {
  return Compress(drawing, true, true);
}

OrthoDrawing StripEmptyRows(const OrthoDrawing& drawing) {
  return Compress(drawing, false, true);
}

OrthoDrawing StripEmptyColumns(const OrthoDrawing& drawing) {
  return Compress(drawing, true, false);
}

}  // namespace orthocompact
