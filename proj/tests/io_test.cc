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


#include "orthocompact/io.h"

#include <string>

#include "gtest/gtest.h"
#include "orthocompact/driver.h"
#include "orthocompact/errors.h"
#include "test_support.h"

namespace orthocompact {
namespace {

using ::orthocompact::testing::GoldenPath;
using ::orthocompact::testing::LoadFixture;

TEST(OgdTest, ParsesUnitSquare) {
  const OrthoDrawing d = LoadFixture("unit_square.ogd");
  ASSERT_EQ(d.vertices.size(), 4u);
  ASSERT_EQ(d.edges.size(), 4u);
  EXPECT_EQ(d.vertices[2].pos, (GridPoint{1, 1}));
  EXPECT_EQ(d.edges[3].source, 3);
  EXPECT_EQ(d.edges[3].target, 0);
}

TEST(OgdTest, RoundTrip) {
  for (const char* name : {"unit_square.ogd", "fig2a.ogd", "fig3a.ogd",
                           "fig3b.ogd", "fig4.ogd"}) {
    const OrthoDrawing d = LoadFixture(name);
    EXPECT_EQ(ParseOgd(SerializeOgd(d)), d) << name;
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const OrthoDrawing d = Generate(GeneratorKind::kRandom, 30, seed);
    EXPECT_EQ(ParseOgd(SerializeOgd(d)), d);
  }
}

TEST(OgdTest, CommentsBlankLinesAndBends) {
  const OrthoDrawing d = ParseOgd(
      "# leading comment\n\nOGD 1\nV 0 0 0\r\nV 1 2 1  # trailing\n"
      "E 0 0 1 1 0 1 1\n");
  ASSERT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.edges[0].bends,
            (std::vector<GridPoint>{{1, 0}, {1, 1}}));
}

TEST(OgdTest, CanonicalizesRedundantBends) {
  const OrthoDrawing d = ParseOgd("OGD 1\nV 0 0 0\nV 1 4 0\nE 0 0 1 2 0\n");
  EXPECT_TRUE(d.edges[0].bends.empty());
}

void ExpectParseError(const std::string& text, int line, int column) {
  try {
    ParseOgdUnchecked(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_EQ(e.column(), column) << text;
  }
}

TEST(OgdTest, ParseErrors) {
  ExpectParseError("", 1, 1);
  ExpectParseError("OGD 2\n", 1, 1);
  ExpectParseError("OGD 1\nV 0 0\n", 2, 1);
  ExpectParseError("OGD 1\nV 0 0 x\n", 2, 7);
  ExpectParseError("OGD 1\nV 0 0 0\nV 0 1 0\n", 3, 3);
  ExpectParseError("OGD 1\nV 0 0 0\nV 1 1 0\nE 0 0 1 3\n", 4, 1);
  ExpectParseError("OGD 1\nV 0 0 0\nV 1 1 0\nE 0 0 1\nE 0 1 0\n", 5, 3);
  ExpectParseError("OGD 1\nQ 1\n", 2, 1);
}

TEST(OgdTest, InvalidDrawingRejected) {
  EXPECT_THROW(ParseOgd(ReadFile(testing::TestdataPath("broken.ogd"))),
               InvalidDrawingError);
  EXPECT_THROW(ParseOgd("OGD 1\nV 0 0 0\nV 1 1 1\nE 0 0 1\n"),
               InvalidDrawingError);
}

TEST(OgdTest, MissingFile) {
  EXPECT_THROW(ReadFile("/nonexistent/file.ogd"), std::runtime_error);
}

TEST(SvgTest, MatchesGolden) {
  EXPECT_EQ(RenderSvg(LoadFixture("unit_square.ogd")),
            ReadFile(GoldenPath("unit_square.svg")));
}

TEST(SvgTest, OneElementPerEdgeAndVertex) {
  const OrthoDrawing d = LoadFixture("fig4.ogd");
  const std::string svg = RenderSvg(d);
  auto count = [&](const std::string& needle) {
    size_t n = 0;
    for (size_t p = svg.find(needle); p != std::string::npos;
         p = svg.find(needle, p + 1)) {
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count("<polyline"), d.edges.size());
  EXPECT_EQ(count("<circle"), d.vertices.size());
  EXPECT_EQ(count("class=\"highlight\""), 0u);
}

TEST(SvgTest, HighlightsNewBends) {
  const OrthoDrawing before = LoadFixture("fig3a.ogd");
  const OrthoDrawing after = LoadFixture("fig3b.ogd");
  const std::set<EdgeId> fresh = EdgesWithNewBends(before, after);
  ASSERT_EQ(fresh.size(), 1u);
  SvgOptions options;
  options.highlight = fresh;
  const std::string svg = RenderSvg(after, options);
  const std::string tag =
      "data-edge=\"" + std::to_string(*fresh.begin()) + "\"";
  const size_t at = svg.find(tag);
  ASSERT_NE(at, std::string::npos);
  const size_t start = svg.rfind("<polyline", at);
  const size_t end = svg.find("/>", at);
  EXPECT_NE(svg.substr(start, end - start).find("class=\"highlight\""),
            std::string::npos);
}

TEST(JsonTest, MetricsRecordRoundTrip) {
  MetricsRecord r;
  r.instance = "comb-5";
  r.mode = "ff";
  r.iterations = 3;
  r.metrics = ComputeMetrics(LoadFixture("fig4.ogd"));
  r.dissection_edges = 42;
  r.wall_time_ms = 1.5;
  const std::string line = ToJsonLine(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line.rfind("{\"instance\":\"comb-5\",\"mode\":\"ff\"", 0), 0u);
  const MetricsRecord back = MetricsRecordFromJson(line);
  EXPECT_EQ(back.instance, r.instance);
  EXPECT_EQ(back.mode, r.mode);
  EXPECT_EQ(back.iterations, r.iterations);
  EXPECT_EQ(back.metrics, r.metrics);
  EXPECT_EQ(back.dissection_edges, r.dissection_edges);
  EXPECT_DOUBLE_EQ(back.wall_time_ms, r.wall_time_ms);
}

TEST(JsonTest, MalformedRecord) {
  EXPECT_THROW(MetricsRecordFromJson("not json"), ParseError);
  EXPECT_THROW(MetricsRecordFromJson("{\"instance\":\"a\"}"), ParseError);
}

TEST(JsonTest, ComparisonLines) {
  const ComparisonReport report = Compare(LoadFixture("fig3a.ogd"));
  const std::string lines = ComparisonJsonLines("fig3a", report);
  std::vector<std::string> split;
  size_t pos = 0;
  for (size_t nl; (nl = lines.find('\n', pos)) != std::string::npos;
       pos = nl + 1) {
    split.push_back(lines.substr(pos, nl - pos));
  }
  ASSERT_EQ(split.size(), 4u);
  EXPECT_EQ(MetricsRecordFromJson(split[0]).mode, "input");
  EXPECT_EQ(MetricsRecordFromJson(split[1]).mode, "trad");
  EXPECT_EQ(MetricsRecordFromJson(split[2]).mode, "ff");
  EXPECT_EQ(MetricsRecordFromJson(split[2]).metrics, report.ff);
  EXPECT_EQ(split[3], ComparisonJsonLine("fig3a", report));
  EXPECT_NE(split[3].find("\"mode\":\"compare\""), std::string::npos);
  EXPECT_NE(split[3].find("\"area_pct\":25"), std::string::npos);
}

}  // namespace
}  // namespace orthocompact
