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

#include "gtest/gtest.h"
#include "orthocompact/normalize.h"
#include "test_support.h"

namespace orthocompact {
namespace {

TEST(GenerateTest, GridTwoIsUnitSquare) {
  const OrthoDrawing grid = GenerateGrid(2);
  const Metrics m = ComputeMetrics(grid);
  EXPECT_EQ(grid.vertices.size(), 4u);
  EXPECT_EQ(grid.edges.size(), 4u);
  EXPECT_EQ(m.area, 1);
  EXPECT_EQ(m.total_edge_length, 4);
}

TEST(GenerateTest, GridCounts) {
  for (int n = 2; n <= 6; ++n) {
    const OrthoDrawing grid = GenerateGrid(n);
    EXPECT_EQ(grid.vertices.size(), static_cast<size_t>(n * n));
    EXPECT_EQ(grid.edges.size(), static_cast<size_t>(2 * n * (n - 1)));
  }
}

TEST(GenerateTest, CombThreeIsTheTwoByFourFrame) {
  EXPECT_EQ(GenerateComb(3), testing::LoadFixture("fig3a.ogd"));
}

TEST(GenerateTest, CombHeightGrows) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(ComputeMetrics(GenerateComb(n)).height, 2 * (n - 1));
  }
}

TEST(GenerateTest, StaircaseHasOneBentEdge) {
  for (int n = 1; n <= 6; ++n) {
    const OrthoDrawing s = GenerateStaircase(n);
    int bent = 0;
    for (const Edge& e : s.edges) bent += !e.bends.empty();
    EXPECT_EQ(bent, 1) << n;
  }
}

TEST(GenerateTest, AllValidAndDeterministic) {
  for (GeneratorKind kind : {GeneratorKind::kGrid, GeneratorKind::kComb,
                             GeneratorKind::kStaircase,
                             GeneratorKind::kRandom}) {
    for (int n = 1; n <= 40; n += 3) {
      for (uint64_t seed = 0; seed < 5; ++seed) {
        const OrthoDrawing d = Generate(kind, n, seed);
        EXPECT_TRUE(Validate(d).ok())
            << GeneratorKindName(kind) << " " << n << " " << seed;
        EXPECT_EQ(d, Generate(kind, n, seed));
        EXPECT_EQ(d, Canonicalized(d));
      }
    }
  }
}

TEST(GenerateTest, RandomSizeAndVariety) {
  int with_bends = 0, with_slack = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const OrthoDrawing d = GenerateRandom(25, seed);
    EXPECT_GE(d.vertices.size(), 10u);
    EXPECT_LE(d.vertices.size(), 60u);
    with_bends += ComputeMetrics(d).bend_count > 0;
    with_slack += StripEmptyGridLines(d) != d;
  }
  EXPECT_GT(with_bends, 0);
  EXPECT_GT(with_slack, 0);
  EXPECT_NE(GenerateRandom(25, 1), GenerateRandom(25, 2));
}

TEST(GenerateTest, KindNames) {
  for (GeneratorKind kind : {GeneratorKind::kGrid, GeneratorKind::kComb,
                             GeneratorKind::kStaircase,
                             GeneratorKind::kRandom}) {
    EXPECT_EQ(ParseGeneratorKind(GeneratorKindName(kind)), kind);
  }
  EXPECT_FALSE(ParseGeneratorKind("spiral").has_value());
}

}  // namespace
}  // namespace orthocompact
