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

#ifndef ORTHOCOMPACT_NORMALIZE_H_
#define ORTHOCOMPACT_NORMALIZE_H_

#include <map>

#include "orthocompact/model.h"

namespace orthocompact {

struct BendOrigin {
  EdgeId edge = 0;
  int bend_index = 0;

  friend bool operator==(const BendOrigin&, const BendOrigin&) = default;
};

struct SegmentOrigin {
  EdgeId edge = 0;
  int segment_index = 0;

  friend bool operator==(const SegmentOrigin&, const SegmentOrigin&) = default;
};

// A drawing whose edges are single segments. Every bend of the source
// drawing became a degree-2 dummy vertex; every normalized edge is oriented
// along its original edge so that chaining by segment_index rebuilds it.
struct NormalizedDrawing {
  OrthoDrawing drawing;
  std::map<VertexId, BendOrigin> bend_origin;
  std::map<EdgeId, SegmentOrigin> edge_origin;

  bool IsDummy(VertexId v) const { return bend_origin.contains(v); }
};

NormalizedDrawing Normalize(const OrthoDrawing& drawing);

// Rebuilds the bend-bearing drawing. Zero-length segments are dropped and
// dummies between collinear segments disappear. Throws InvalidDrawingError
// when a dummy's two segments leave it in the same direction.
OrthoDrawing Denormalize(const NormalizedDrawing& normalized);

// Removes every grid column and row that holds no vertex and no bend,
// shifting the remaining lines together so the smallest coordinate is 0.
OrthoDrawing StripEmptyGridLines(const OrthoDrawing& drawing);
OrthoDrawing StripEmptyRows(const OrthoDrawing& drawing);
OrthoDrawing StripEmptyColumns(const OrthoDrawing& drawing);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_NORMALIZE_H_
