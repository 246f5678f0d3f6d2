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

#include "gtest/gtest.h"
#include "orthocompact/errors.h"
#include "test_support.h"

namespace orthocompact {
namespace {

using ::orthocompact::testing::LoadFixture;

OrthoDrawing Square(Coord size) {
  return {{{0, {0, 0}}, {1, {size, 0}}, {2, {size, size}}, {3, {0, size}}},
          {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 3, {}}, {3, 3, 0, {}}}};
}

TEST(ValidateTest, UnitSquareIsValid) {
  EXPECT_TRUE(Validate(Square(1)).ok());
}

TEST(ValidateTest, EmptyDrawing) {
  EXPECT_EQ(Validate({}).Count(ViolationKind::kEmpty), 1);
}

TEST(ValidateTest, DuplicateAndUnknownIds) {
  OrthoDrawing d = Square(1);
  d.vertices.push_back({2, {5, 5}});
  d.edges.push_back({4, 0, 42, {}});
  const ValidationReport r = Validate(d);
  EXPECT_EQ(r.Count(ViolationKind::kDuplicateId), 1);
  EXPECT_EQ(r.Count(ViolationKind::kUnknownVertex), 1);
}

TEST(ValidateTest, DiagonalSegment) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {1, 1}}}, {{0, 0, 1, {}}}};
  EXPECT_EQ(Validate(d).Count(ViolationKind::kNonAxisSegment), 1);
}

TEST(ValidateTest, StraightBend) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {2, 0}}}, {{0, 0, 1, {{1, 0}}}}};
  EXPECT_EQ(Validate(d).Count(ViolationKind::kStraightOrReversedBend), 1);
  EXPECT_TRUE(Validate(Canonicalized(d)).ok());
}

TEST(ValidateTest, CrossingEdges) {
  OrthoDrawing d = {{{0, {0, 1}}, {1, {2, 1}}, {2, {1, 0}}, {3, {1, 2}},
                     {4, {0, 3}}},
                    {{0, 0, 1, {}}, {1, 2, 3, {}}, {2, 0, 4, {}},
                     {3, 4, 3, {{1, 3}}}}};
  const ValidationReport r = Validate(d);
  EXPECT_EQ(r.Count(ViolationKind::kPlanarity), 1) << r.ToString();
}

TEST(ValidateTest, VertexOnEdgeInterior) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {2, 0}}, {2, {1, 0}}, {3, {1, 1}}},
                    {{0, 0, 1, {}}, {1, 2, 3, {}}}};
  EXPECT_GE(Validate(d).Count(ViolationKind::kPlanarity), 1);
}

TEST(ValidateTest, OverlappingCollinearSegments) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {3, 0}}, {2, {1, 1}}},
                    {{0, 0, 1, {}}, {1, 2, 1, {{1, 0}}}}};
  EXPECT_GE(Validate(d).Count(ViolationKind::kPlanarity), 1);
}

TEST(ValidateTest, DegreeAndStarGeometry) {
  // Both edges leave vertex 0 eastwards.
  OrthoDrawing d = {{{0, {0, 0}}, {1, {2, 0}}, {2, {0, 2}}},
                    {{0, 0, 1, {}}, {1, 0, 2, {{1, 0}, {1, 1}, {0, 1}}}}};
  EXPECT_GE(Validate(d).Count(ViolationKind::kStarGeometry), 1);

  OrthoDrawing star = {{{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {-1, 0}},
                        {4, {0, -1}}, {5, {2, 2}}},
                       {{0, 0, 1, {}}, {1, 0, 2, {}}, {2, 0, 3, {}},
                        {3, 0, 4, {}}, {4, 5, 1, {{2, 0}}}}};
  EXPECT_TRUE(Validate(star).ok()) << Validate(star).ToString();
}

TEST(ValidateTest, Disconnected) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {5, 5}}}, {}};
  EXPECT_EQ(Validate(d).Count(ViolationKind::kDisconnected), 1);
  EXPECT_THROW(ValidateOrThrow(d), InvalidDrawingError);
}

TEST(ValidateTest, SingleVertexIsValid) {
  EXPECT_TRUE(Validate({{{7, {3, 3}}}, {}}).ok());
}

TEST(MetricsTest, SplitFrameFixture) {
  const OrthoDrawing d = LoadFixture("fig3a.ogd");
  const Metrics m = ComputeMetrics(d);
  EXPECT_EQ(m.width, 2);
  EXPECT_EQ(m.height, 4);
  EXPECT_EQ(m.area, 8);
  EXPECT_EQ(m.bend_count, 0);
  EXPECT_EQ(m.total_edge_length, 14);
  EXPECT_EQ(m.max_edge_length, 2);
  EXPECT_EQ(VerticalLength(d), 8);
  EXPECT_EQ(HorizontalLength(d), 6);
}

TEST(MetricsTest, JoggedFrameFixture) {
  const OrthoDrawing d = LoadFixture("fig3b.ogd");
  const Metrics m = ComputeMetrics(d);
  EXPECT_EQ(m.height, 3);
  EXPECT_EQ(m.area, 6);
  EXPECT_EQ(m.bend_count, 2);
  EXPECT_EQ(m.total_edge_length, 13);
  EXPECT_EQ(VerticalLength(d), 7);
}

TEST(MetricsTest, BendsCountedInBoundingBox) {
  OrthoDrawing d = {{{0, {0, 0}}, {1, {2, 0}}},
                    {{0, 0, 1, {{0, 3}, {2, 3}}}}};
  const Metrics m = ComputeMetrics(d);
  EXPECT_EQ(m.height, 3);
  EXPECT_EQ(m.total_edge_length, 8);
  EXPECT_EQ(m.bend_count, 2);
}

TEST(EmbeddingTest, SplitFrameHasThreeFaces) {
  const Embedding e = ComputeEmbedding(LoadFixture("fig3a.ogd"));
  ASSERT_EQ(e.faces.size(), 3u);
  int external = 0;
  for (const Face& f : e.faces) {
    external += f.is_external;
    EXPECT_EQ(f.quarter_turns, f.is_external ? -4 : 4);
  }
  EXPECT_EQ(external, 1);
}

TEST(EmbeddingTest, RotationListsDirections) {
  const Embedding e = ComputeEmbedding(LoadFixture("fig3a.ogd"));
  // Vertex 9 at (0,2): edges north, south and east.
  const std::vector<Direction> expected = {Direction::kNorth, Direction::kEast,
                                           Direction::kSouth};
  EXPECT_EQ(e.rotation.at(9), expected);
}

TEST(StarGeometryTest, SurvivesTranslation) {
  const OrthoDrawing d = LoadFixture("fig4.ogd");
  OrthoDrawing moved = d;
  for (Vertex& v : moved.vertices) v.pos.y += 10;
  for (Edge& e : moved.edges) {
    for (GridPoint& b : e.bends) b.y += 10;
  }
  EXPECT_EQ(ComputeStarGeometry(d), ComputeStarGeometry(moved));
  EXPECT_EQ(ComputeStarGeometry(d).at.at(5).size(), 3u);
}

TEST(TransposeTest, SwapsAxesAndIsInvolution) {
  const OrthoDrawing d = LoadFixture("fig4.ogd");
  const OrthoDrawing t = Transposed(d);
  EXPECT_TRUE(Validate(t).ok());
  EXPECT_EQ(ComputeMetrics(t).width, ComputeMetrics(d).height);
  EXPECT_EQ(Transposed(t), d);
}

TEST(CanonicalPolylineTest, DropsDuplicatesAndCollinearPoints) {
  const std::vector<GridPoint> got =
      CanonicalPolyline({{0, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 3}});
  const std::vector<GridPoint> want = {{0, 0}, {2, 0}, {2, 3}};
  EXPECT_EQ(got, want);
}

}  // namespace
}  // namespace orthocompact
