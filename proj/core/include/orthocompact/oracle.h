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


// Exhaustive reference solvers for tiny instances. Exponential; used by
// tests and fixture generation only.

#ifndef ORTHOCOMPACT_ORACLE_H_
#define ORTHOCOMPACT_ORACLE_H_

#include <stdexcept>

#include "orthocompact/flow.h"
#include "orthocompact/model.h"

namespace orthocompact {

// Thrown when an instance exceeds the oracle's search limits.
class OracleRefusedError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleResult {
  Coord optimum = 0;    // minimal total vertical length
  OrthoDrawing witness;  // one drawing attaining it
};

inline constexpr int kOracleMaxLevels = 16;
inline constexpr Coord kOracleMaxRange = 16;

// Minimal total vertical length over all drawings that keep every x
// coordinate and every segment direction and put each horizontal line of
// the input (a maximal horizontally connected set of points) at some integer
// y in [0, y_range_bound]. A negative bound means the input height. Every
// candidate is checked with Validate(). Refuses more than kOracleMaxLevels
// horizontal lines or a bound above kOracleMaxRange.
OracleResult OracleTradVertical(const OrthoDrawing& drawing,
                                Coord y_range_bound = -1);

inline constexpr int kOracleMaxArcs = 12;
inline constexpr FlowQuantity kOracleMaxValue = 6;

// Minimum cost over all integer flows with l <= x <= min(u, value_cap).
// Throws InfeasibleError when none exists in that box and
// OracleRefusedError above kOracleMaxArcs arcs or kOracleMaxValue.
CostValue OracleCirculation(const FlowNetwork& net, FlowQuantity value_cap);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_ORACLE_H_
