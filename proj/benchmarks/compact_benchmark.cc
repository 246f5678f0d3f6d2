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


#include <vector>

#include "benchmark/benchmark.h"
#include "orthocompact/compact.h"
#include "orthocompact/driver.h"
#include "orthocompact/flow.h"
#include "orthocompact/generate.h"

namespace orthocompact {
namespace {

void BM_VerticalStep(benchmark::State& state, GeneratorKind kind, Mode mode) {
  const OrthoDrawing d = Generate(kind, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CompactStep(d, mode, Axis::kVertical));
  }
  state.counters["vertices"] = static_cast<double>(d.vertices.size());
}
BENCHMARK_CAPTURE(BM_VerticalStep, comb_trad, GeneratorKind::kComb,
                  Mode::kTrad)
    ->RangeMultiplier(2)
    ->Range(4, 64);
BENCHMARK_CAPTURE(BM_VerticalStep, comb_ff, GeneratorKind::kComb, Mode::kFf)
    ->RangeMultiplier(2)
    ->Range(4, 64);
BENCHMARK_CAPTURE(BM_VerticalStep, random_trad, GeneratorKind::kRandom,
                  Mode::kTrad)
    ->RangeMultiplier(2)
    ->Range(16, 256);
BENCHMARK_CAPTURE(BM_VerticalStep, random_ff, GeneratorKind::kRandom,
                  Mode::kFf)
    ->RangeMultiplier(2)
    ->Range(16, 256);

void BM_Alternate(benchmark::State& state, Mode mode) {
  const OrthoDrawing d =
      GenerateRandom(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Alternate(d, mode));
  }
}
BENCHMARK_CAPTURE(BM_Alternate, trad, Mode::kTrad)->Arg(32)->Arg(128);
BENCHMARK_CAPTURE(BM_Alternate, ff, Mode::kFf)->Arg(32)->Arg(128);

// A layered network: `width` nodes per layer, every node linked to every
// node of the next layer.
FlowNetwork LayeredNetwork(int layers, int width) {
  FlowNetwork net;
  for (int k = 0; k < layers * width; ++k) net.AddNode(0);
  net.demand[0] = width;
  net.demand[(layers - 1) * width] = -width;
  for (int l = 0; l + 1 < layers; ++l) {
    for (int a = 0; a < width; ++a) {
      for (int b = 0; b < width; ++b) {
        net.AddArc(l * width + a, (l + 1) * width + b, 0, 2,
                   (a * 7 + b * 3 + l) % 5);
      }
    }
  }
  return net;
}

void BM_SolveMinCost(benchmark::State& state) {
  const FlowNetwork net =
      LayeredNetwork(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(SolveMinCost(net));
  state.counters["arcs"] = net.num_arcs();
}
BENCHMARK(BM_SolveMinCost)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
}  // namespace orthocompact

BENCHMARK_MAIN();
