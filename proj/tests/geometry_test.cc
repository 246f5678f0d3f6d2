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


#include "orthocompact/geometry.h"

#include "gtest/gtest.h"
#include "orthocompact/errors.h"
#include "orthocompact/plane_graph.h"

namespace orthocompact {
namespace {

TEST(DirectionTest, ClockwiseWrapsBothWays) {
  EXPECT_EQ(Clockwise(Direction::kNorth), Direction::kEast);
  EXPECT_EQ(Clockwise(Direction::kWest), Direction::kNorth);
  EXPECT_EQ(Clockwise(Direction::kNorth, -1), Direction::kWest);
  EXPECT_EQ(Clockwise(Direction::kSouth, 6), Direction::kNorth);
  EXPECT_EQ(Opposite(Direction::kEast), Direction::kWest);
}

TEST(DirectionTest, BetweenAxisNeighbours) {
  EXPECT_EQ(DirectionBetween({0, 0}, {0, 5}), Direction::kNorth);
  EXPECT_EQ(DirectionBetween({0, 0}, {-2, 0}), Direction::kWest);
  EXPECT_THROW(DirectionBetween({0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(DirectionBetween({3, 3}, {3, 3}), std::invalid_argument);
}

TEST(DirectionTest, TurnSigns) {
  EXPECT_EQ(TurnBetween(Direction::kEast, Direction::kNorth), +1);
  EXPECT_EQ(TurnBetween(Direction::kEast, Direction::kSouth), -1);
  EXPECT_EQ(TurnBetween(Direction::kEast, Direction::kEast), 0);
  EXPECT_EQ(TurnBetween(Direction::kEast, Direction::kWest), -2);
}

PlaneGraph UnitSquare() {
  PlaneGraph g;
  const int a = g.AddNode({0, 0});
  const int b = g.AddNode({1, 0});
  const int c = g.AddNode({1, 1});
  const int d = g.AddNode({0, 1});
  g.AddSegment(a, b);
  g.AddSegment(b, c);
  g.AddSegment(c, d);
  g.AddSegment(d, a);
  return g;
}

TEST(PlaneGraphTest, UnitSquareHasTwoFaces) {
  const PlaneGraph g = UnitSquare();
  const PlaneFaces faces = g.ComputeFaces();
  ASSERT_EQ(faces.size(), 2);
  EXPECT_EQ(faces.quarter_turns[faces.external], -4);
  EXPECT_EQ(faces.quarter_turns[1 - faces.external], 4);
  // Dart 0 runs east along the bottom; the square lies on its left.
  EXPECT_NE(faces.dart_face[0], faces.external);
  EXPECT_EQ(faces.dart_face[1], faces.external);
}

TEST(PlaneGraphTest, PortsAndDegree) {
  const PlaneGraph g = UnitSquare();
  EXPECT_EQ(g.Degree(0), 2);
  EXPECT_EQ(g.Port(0, Direction::kEast), 0);
  EXPECT_EQ(g.Port(0, Direction::kNorth), 7);
  EXPECT_EQ(g.Port(0, Direction::kWest), -1);
}

TEST(PlaneGraphTest, PathHasOnlyTheUnboundedFace) {
  PlaneGraph g;
  const int a = g.AddNode({0, 0});
  const int b = g.AddNode({0, 2});
  const int c = g.AddNode({3, 2});
  g.AddSegment(a, b);
  g.AddSegment(b, c);
  const PlaneFaces faces = g.ComputeFaces();
  EXPECT_EQ(faces.size(), 1);
  EXPECT_EQ(faces.boundary[0].size(), 4u);
}

TEST(PlaneGraphTest, SingleNode) {
  PlaneGraph g;
  g.AddNode({4, 4});
  const PlaneFaces faces = g.ComputeFaces();
  EXPECT_EQ(faces.size(), 1);
  EXPECT_EQ(faces.external, 0);
}

TEST(PlaneGraphTest, RejectsBadSegments) {
  PlaneGraph g;
  const int a = g.AddNode({0, 0});
  const int b = g.AddNode({1, 1});
  const int c = g.AddNode({0, 0});
  const int d = g.AddNode({2, 0});
  EXPECT_THROW(g.AddSegment(a, b), InternalError);
  EXPECT_THROW(g.AddSegment(a, c), InternalError);
  g.AddSegment(a, d);
  const int e = g.AddNode({5, 0});
  EXPECT_THROW(g.AddSegment(a, e), InternalError);  // east port taken
}

TEST(PlaneGraphTest, DisconnectedThrows) {
  PlaneGraph g;
  g.AddNode({0, 0});
  g.AddNode({5, 5});
  EXPECT_THROW(g.ComputeFaces(), InvalidDrawingError);
}

}  // namespace
}  // namespace orthocompact
