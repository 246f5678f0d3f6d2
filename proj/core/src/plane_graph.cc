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

#include "orthocompact/plane_graph.h"

#include <numeric>
#include <string>

#include "orthocompact/errors.h"

namespace orthocompact {

int PlaneGraph::AddNode(GridPoint position) {
  positions_.push_back(position);
  ports_.push_back({-1, -1, -1, -1});
  return num_nodes() - 1;
}

int PlaneGraph::AddSegment(int first, int second) {
  const GridPoint a = positions_.at(first);
  const GridPoint b = positions_.at(second);
  if ((a.x != b.x) == (a.y != b.y)) {
    throw InternalError("segment is not axis-parallel with positive length");
  }
  const Direction forward = DirectionBetween(a, b);
  int& out = ports_[first][Index(forward)];
  int& in = ports_[second][Index(Opposite(forward))];
  if (out != -1 || in != -1) {
    throw InternalError("port already occupied at segment " +
                        std::to_string(num_segments()));
  }
  const int segment = num_segments();
  endpoints_.push_back({first, second});
  out = 2 * segment;
  in = 2 * segment + 1;
  return segment;
}

int PlaneGraph::Degree(int node) const {
  int degree = 0;
  for (int dart : ports_[node]) degree += dart != -1;
  return degree;
}

int PlaneGraph::NextInFace(int dart) const {
  const int twin = Twin(dart);
  const int node = Tail(twin);
  const Direction back = DartDirection(twin);
  for (int turn = 1; turn <= 4; ++turn) {
    const int candidate = Port(node, Clockwise(back, turn));
    if (candidate != -1) return candidate;
  }
  return twin;
}

PlaneFaces PlaneGraph::ComputeFaces() const {
  // Connectivity first: the face structure below assumes a single external
  // face.
  std::vector<int> parent(num_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = num_nodes();
  for (const auto& [a, b] : endpoints_) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components > 1) {
    throw InvalidDrawingError("drawing is disconnected (" +
                              std::to_string(components) + " components)");
  }

  PlaneFaces faces;
  faces.dart_face.assign(num_darts(), -1);
  for (int start = 0; start < num_darts(); ++start) {
    if (faces.dart_face[start] != -1) continue;
    const int face = faces.size();
    std::vector<int> cycle;
    int turns = 0;
    int dart = start;
    do {
      faces.dart_face[dart] = face;
      cycle.push_back(dart);
      const int next = NextInFace(dart);
      turns += TurnBetween(DartDirection(dart), DartDirection(next));
      dart = next;
    } while (dart != start);
    faces.boundary.push_back(std::move(cycle));
    faces.quarter_turns.push_back(turns);
  }
  if (faces.boundary.empty()) {
    // Single isolated node: only the unbounded face.
    faces.boundary.emplace_back();
    faces.quarter_turns.push_back(-4);
  }
  for (int f = 0; f < faces.size(); ++f) {
    if (faces.quarter_turns[f] == -4) {
      if (faces.external != -1) {
        throw InternalError("more than one unbounded face");
      }
      faces.external = f;
    } else if (faces.quarter_turns[f] != 4) {
      throw InternalError("face " + std::to_string(f) +
                          " has turn sum " +
                          std::to_string(faces.quarter_turns[f] * 90));
    }
  }
  if (faces.external == -1) throw InternalError("no unbounded face");
  return faces;
}

}  // namespace orthocompact
