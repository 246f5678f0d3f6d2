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


// Deterministic instance generators. Every output passes Validate().

#ifndef ORTHOCOMPACT_GENERATE_H_
#define ORTHOCOMPACT_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "orthocompact/model.h"

namespace orthocompact {

enum class GeneratorKind { kGrid, kComb, kStaircase, kRandom };

const char* GeneratorKindName(GeneratorKind kind);
std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name);

// n x n unit mesh; n = 2 is the unit square.
OrthoDrawing GenerateGrid(int n);

// A frame of height 2(n-1) split by one horizontal edge. On the left the
// part above the edge is cut into n-1 unit segments, on the right the part
// below; TRAD must keep the splitting edge straight, Fled-Five may let it
// jog and roughly halves the height. n = 3 reproduces a 2 x 4 frame.
OrthoDrawing GenerateComb(int n);

// Closed band between two parallel staircases with n steps of size 2. The
// upper staircase is one edge with bends.
OrthoDrawing GenerateStaircase(int n);

// About n vertices: a random connected set of lattice points with a random
// spanning tree plus extra lattice edges, stretched by random empty rows
// and columns, with some edges subdivided and some degree-2 vertices
// smoothed into bends.
OrthoDrawing GenerateRandom(int n, uint64_t seed);

OrthoDrawing Generate(GeneratorKind kind, int n, uint64_t seed);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_GENERATE_H_
