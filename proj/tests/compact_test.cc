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

#include "gtest/gtest.h"
#include "orthocompact/errors.h"
#include "orthocompact/normalize.h"
#include "test_support.h"

namespace orthocompact {
namespace {

using ::orthocompact::testing::LoadFixture;
using ::orthocompact::testing::SumSegmentLengths;

OrthoDrawing SingleEdge(std::vector<GridPoint> bends, GridPoint target) {
  return {{{0, {0, 0}}, {1, target}}, {{0, 0, 1, std::move(bends)}}};
}

TEST(MiddleSegmentsTest, ZShape) {
  const auto middle = MiddleSegments(SingleEdge({{1, 0}, {1, 1}}, {2, 1}));
  EXPECT_EQ(middle, (std::set<std::pair<EdgeId, int>>{{0, 1}}));
}

TEST(MiddleSegmentsTest, UShapeIsNotMiddle) {
  EXPECT_TRUE(MiddleSegments(SingleEdge({{1, 0}, {1, 1}}, {0, 1})).empty());
}

TEST(MiddleSegmentsTest, StraightAndSingleBend) {
  EXPECT_TRUE(MiddleSegments(SingleEdge({}, {3, 0})).empty());
  EXPECT_TRUE(MiddleSegments(SingleEdge({{2, 0}}, {2, 2})).empty());
}

TEST(MiddleSegmentsTest, HorizontalMiddleIgnored) {
  // N, E, N: the middle piece is horizontal.
  EXPECT_TRUE(
      MiddleSegments(SingleEdge({{0, 1}, {1, 1}}, {1, 2})).empty());
}

TEST(MiddleSegmentsTest, PreBentEdge) {
  const auto middle = MiddleSegments(LoadFixture("fig4.ogd"));
  EXPECT_EQ(middle, (std::set<std::pair<EdgeId, int>>{{2, 1}}));
}

struct Pipeline {
  NormalizedDrawing nd;
  DissectedDrawing dd;
  BuiltNetwork built;
};

Pipeline Build(const OrthoDrawing& d, Mode mode) {
  Pipeline p;
  p.nd = Normalize(d);
  std::vector<BendVertexSite> sites;
  if (mode == Mode::kFf) sites = InsertBendVertices(p.nd);
  p.dd = VerticalDissect(p.nd, sites);
  p.built = mode == Mode::kFf ? BuildFfNetwork(p.dd) : BuildTradNetwork(p.dd);
  return p;
}

TEST(BuildTradNetworkTest, UnitSquare) {
  const Pipeline p = Build(LoadFixture("unit_square.ogd"), Mode::kTrad);
  const FlowNetwork& net = p.built.network;
  ASSERT_EQ(net.num_nodes(), 2);
  ASSERT_EQ(net.num_arcs(), 2);
  const int outside = p.built.map.face_node[p.built.faces.external];
  int into = 0, out_of = 0;
  for (const FlowArc& arc : net.arcs) {
    EXPECT_EQ(arc.lower, 1);
    EXPECT_EQ(arc.upper, kUnbounded);
    EXPECT_EQ(arc.cost, 1);
    into += arc.tail == outside;
    out_of += arc.head == outside;
  }
  EXPECT_EQ(into, 1);
  EXPECT_EQ(out_of, 1);
  // The left side runs from the exterior (its -x side) into the square.
  const int left_side_arc = p.built.map.segment_arc[3];
  EXPECT_EQ(net.arcs[left_side_arc].tail, outside);
}

TEST(BuildTradNetworkTest, MixedFaces) {
  const Pipeline p = Build(LoadFixture("fig2a.ogd"), Mode::kTrad);
  const FlowNetwork& net = p.built.network;
  EXPECT_EQ(net.num_nodes(), 11);
  int vertical = 0, zero_cost = 0;
  for (int s = 0; s < p.dd.graph.num_segments(); ++s) {
    vertical += p.dd.graph.IsVerticalSegment(s);
  }
  for (const FlowArc& arc : net.arcs) {
    zero_cost += arc.cost == 0;
    EXPECT_EQ(arc.lower, 1);
  }
  EXPECT_EQ(net.num_arcs(), vertical);
  EXPECT_EQ(zero_cost, 5);
  EXPECT_TRUE(p.built.map.middle_arcs.empty());
}

TEST(BuildFfNetworkTest, SplitFrameBendArcs) {
  const Pipeline p = Build(LoadFixture("fig3a.ogd"), Mode::kFf);
  ASSERT_EQ(p.built.map.bend_arcs.size(), 1u);
  const auto [up, down] = p.built.map.bend_arcs[0];
  ASSERT_NE(up, -1);
  ASSERT_NE(down, -1);
  const BendFaces faces =
      FacesAround(p.dd, p.built.faces, p.dd.bend_vertices[0].node);
  const FlowArc& a_down = p.built.network.arcs[down];
  EXPECT_EQ(a_down.tail, p.built.map.face_node[faces.upper_left]);
  EXPECT_EQ(a_down.head, p.built.map.face_node[faces.lower_right]);
  EXPECT_EQ(a_down.lower, 0);
  EXPECT_EQ(a_down.cost, 1);
  // Both sides of the splitting edge are bounded faces.
  EXPECT_NE(faces.upper_left, p.built.faces.external);
  EXPECT_NE(faces.lower_right, p.built.faces.external);
  EXPECT_NE(faces.upper_left, faces.lower_right);
}

TEST(BuildFfNetworkTest, PreBentMiddleArcAndPairs) {
  const Pipeline p = Build(LoadFixture("fig4.ogd"), Mode::kFf);
  EXPECT_EQ(p.built.map.middle_arcs.size(), 1u);
  for (int arc : p.built.map.middle_arcs) {
    EXPECT_EQ(p.built.network.arcs[arc].lower, 0);
  }
  EXPECT_EQ(p.built.map.bend_arcs.size(), 5u);
}

TEST(BuildFfNetworkTest, OuterBoundarySelfLoopsOmitted) {
  // A bar whose top edge has interior points: the rays above it escape, so
  // the upper faces coincide with the exterior.
  const OrthoDrawing bar = {
      {{0, {0, 0}}, {1, {3, 0}}, {2, {3, 1}}, {3, {0, 1}}},
      {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 3, {}}, {3, 3, 0, {}}}};
  const Pipeline p = Build(bar, Mode::kFf);
  ASSERT_EQ(p.built.map.bend_arcs.size(), 4u);
  for (const auto& [up, down] : p.built.map.bend_arcs) {
    if (up != -1) {
      const FlowArc& a = p.built.network.arcs[up];
      EXPECT_NE(a.tail, a.head);
    }
    if (down != -1) {
      const FlowArc& a = p.built.network.arcs[down];
      EXPECT_NE(a.tail, a.head);
    }
  }
}

TEST(InitialFlowTest, FeasibleAndFixedPoint) {
  for (const char* name : {"unit_square.ogd", "fig2a.ogd", "fig3a.ogd",
                           "fig3b.ogd", "fig4.ogd"}) {
    for (Mode mode : {Mode::kTrad, Mode::kFf}) {
      const OrthoDrawing d = LoadFixture(name);
      const Pipeline p = Build(d, mode);
      const Flow initial = InitialFlow(p.dd, p.built);
      EXPECT_TRUE(CheckFlow(p.built.network, initial)) << name;
      const Realization r = Realize(p.dd, initial, p.built.map);
      EXPECT_EQ(r.vertical_length, VerticalLength(d)) << name;
      EXPECT_EQ(r.drawing, StripEmptyRows(d)) << name;
    }
  }
}

TEST(RealizeTest, InconsistentFlowIsInternalError) {
  const Pipeline p = Build(LoadFixture("unit_square.ogd"), Mode::kTrad);
  Flow bogus;
  bogus.arc_flow = {1, 2};
  EXPECT_THROW(Realize(p.dd, bogus, p.built.map), InternalError);
}

TEST(CompactStepTest, TradKeepsOptimalSplitFrame) {
  const OrthoDrawing d = LoadFixture("fig3a.ogd");
  EXPECT_EQ(CompactStep(d, Mode::kTrad, Axis::kVertical), d);
}

TEST(CompactStepTest, FfTurnsSplitFrameIntoJoggedFrame) {
  const StepResult step = CompactStepDetailed(LoadFixture("fig3a.ogd"),
                                              Mode::kFf, Axis::kVertical);
  EXPECT_EQ(step.drawing, LoadFixture("fig3b.ogd"));
  EXPECT_EQ(step.flow.total_cost, 7);
  EXPECT_EQ(step.realized_vertical_length, 7);
  EXPECT_EQ(ComputeMetrics(step.drawing).height, 3);
  EXPECT_EQ(ComputeMetrics(step.drawing).bend_count, 2);
}

TEST(CompactStepTest, HorizontalIsTransposedVertical) {
  const OrthoDrawing d = Transposed(LoadFixture("fig3a.ogd"));
  EXPECT_EQ(CompactStep(d, Mode::kFf, Axis::kHorizontal),
            Transposed(LoadFixture("fig3b.ogd")));
}

TEST(CompactStepTest, PreBentEdgeStraightens) {
  const OrthoDrawing d = LoadFixture("fig4.ogd");
  ASSERT_EQ(VerticalLength(d), 19);
  const StepResult trad = CompactStepDetailed(d, Mode::kTrad, Axis::kVertical);
  EXPECT_EQ(VerticalLength(trad.drawing), 19);
  const StepResult ff = CompactStepDetailed(d, Mode::kFf, Axis::kVertical);
  EXPECT_EQ(ComputeMetrics(ff.drawing).height, 4);
  EXPECT_EQ(VerticalLength(ff.drawing), 15);
  EXPECT_EQ(ff.flow.total_cost, 15);
  // The pre-bent edge straightens.
  EXPECT_TRUE(ff.drawing.edges[2].bends.empty());
}

TEST(CompactStepTest, ZeroFlowMiddleSegmentCollapses) {
  // A Z-shaped edge closed into a cycle by a second, cap-shaped edge.
  const OrthoDrawing d = {
      {{0, {0, 0}}, {1, {2, 1}}},
      {{0, 0, 1, {{1, 0}, {1, 1}}}, {1, 0, 1, {{0, 2}, {2, 2}}}}};
  ASSERT_TRUE(Validate(d).ok());
  const OrthoDrawing trad = CompactStep(d, Mode::kTrad, Axis::kVertical);
  EXPECT_EQ(VerticalLength(trad), 4);
  const OrthoDrawing ff = CompactStep(d, Mode::kFf, Axis::kVertical);
  EXPECT_EQ(VerticalLength(ff), 2);
  EXPECT_EQ(ComputeMetrics(ff).bend_count, ComputeMetrics(d).bend_count - 2);
  EXPECT_TRUE(ff.edges[0].bends.empty());
}

TEST(CompactStepTest, RemovesWhiteSpace) {
  const OrthoDrawing d = {
      {{0, {0, 0}}, {1, {5, 0}}, {2, {5, 9}}, {3, {0, 9}}},
      {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 3, {}}, {3, 3, 0, {}}}};
  for (Mode mode : {Mode::kTrad, Mode::kFf}) {
    const OrthoDrawing v = CompactStep(d, mode, Axis::kVertical);
    EXPECT_EQ(ComputeMetrics(v).height, 1);
    EXPECT_EQ(ComputeMetrics(v).width, 5);
    const OrthoDrawing h = CompactStep(v, mode, Axis::kHorizontal);
    EXPECT_EQ(ComputeMetrics(h).area, 1);
  }
}

TEST(CompactStepTest, SingleVertexAndPath) {
  const OrthoDrawing single = {{{0, {4, 4}}}, {}};
  EXPECT_EQ(ComputeMetrics(CompactStep(single, Mode::kFf, Axis::kVertical))
                .total_edge_length,
            0);
  const OrthoDrawing path = {{{0, {0, 0}}, {1, {0, 5}}, {2, {0, 10}}},
                             {{0, 0, 1, {}}, {1, 1, 2, {}}}};
  const OrthoDrawing out = CompactStep(path, Mode::kTrad, Axis::kVertical);
  EXPECT_EQ(SumSegmentLengths(out, true), 2);
}

TEST(CompactStepTest, RejectsInvalidInput) {
  const OrthoDrawing crossing = ParseOgdUnchecked(
      ReadFile(testing::TestdataPath("broken.ogd")));
  EXPECT_THROW(CompactStep(crossing, Mode::kFf, Axis::kVertical),
               InvalidDrawingError);
}

TEST(NamesTest, ModeAndAxis) {
  EXPECT_STREQ(ModeName(Mode::kTrad), "trad");
  EXPECT_STREQ(ModeName(Mode::kFf), "ff");
  EXPECT_STREQ(AxisName(Axis::kVertical), "y");
  EXPECT_STREQ(AxisName(Axis::kHorizontal), "x");
}

}  // namespace
}  // namespace orthocompact
