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

#ifndef ORTHOCOMPACT_PLANE_GRAPH_H_
#define ORTHOCOMPACT_PLANE_GRAPH_H_

#include <array>
#include <vector>

#include "orthocompact/geometry.h"

namespace orthocompact {

// Face cycles of a PlaneGraph. Every face is traversed with the face on the
// left of each dart, so bounded faces run counter-clockwise.
struct PlaneFaces {
  std::vector<std::vector<int>> boundary;  // darts in traversal order
  std::vector<int> quarter_turns;          // +4 bounded, -4 unbounded
  std::vector<int> dart_face;
  int external = -1;

  int size() const { return static_cast<int>(boundary.size()); }
};

// A geometric plane graph whose edges are axis-parallel segments of positive
// length between grid nodes. Segment s owns darts 2s (first -> second
// endpoint) and 2s+1 (reverse). Each node has at most one dart per direction,
// which fixes the rotation system.
class PlaneGraph {
 public:
  int AddNode(GridPoint position);
  // Throws InternalError when the segment is not axis-parallel, has zero
  // length, or reuses a port.
  int AddSegment(int first, int second);

  int num_nodes() const { return static_cast<int>(positions_.size()); }
  int num_segments() const { return static_cast<int>(endpoints_.size()); }
  int num_darts() const { return 2 * num_segments(); }

  GridPoint position(int node) const { return positions_[node]; }
  const std::array<int, 2>& endpoints(int segment) const {
    return endpoints_[segment];
  }

  static int Twin(int dart) { return dart ^ 1; }
  static int SegmentOf(int dart) { return dart >> 1; }
  int Tail(int dart) const { return endpoints_[dart >> 1][dart & 1]; }
  int Head(int dart) const { return endpoints_[dart >> 1][1 - (dart & 1)]; }
  Direction DartDirection(int dart) const {
    return DirectionBetween(position(Tail(dart)), position(Head(dart)));
  }
  bool IsVerticalSegment(int segment) const {
    return positions_[endpoints_[segment][0]].x ==
           positions_[endpoints_[segment][1]].x;
  }

  // Dart leaving `node` in direction `d`, or -1.
  int Port(int node, Direction d) const { return ports_[node][Index(d)]; }
  int Degree(int node) const;

  // The dart following `dart` along its face: the first dart clockwise
  // after the twin at the head node.
  int NextInFace(int dart) const;

  // Throws InvalidDrawingError when the graph is disconnected.
  PlaneFaces ComputeFaces() const;

 private:
  std::vector<GridPoint> positions_;
  std::vector<std::array<int, 2>> endpoints_;
  std::vector<std::array<int, 4>> ports_;
};

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_PLANE_GRAPH_H_
