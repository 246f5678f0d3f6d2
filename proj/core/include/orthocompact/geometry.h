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

#ifndef ORTHOCOMPACT_GEOMETRY_H_
#define ORTHOCOMPACT_GEOMETRY_H_

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orthocompact {

using Coord = int64_t;

struct GridPoint {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GridPoint& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

inline GridPoint Transposed(GridPoint p) { return {p.y, p.x}; }

inline Coord ManhattanDistance(GridPoint a, GridPoint b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Clockwise order; Direction + 1 turns right.
enum class Direction : uint8_t { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

inline constexpr Direction kAllDirections[] = {
    Direction::kNorth, Direction::kEast, Direction::kSouth, Direction::kWest};

inline int Index(Direction d) { return static_cast<int>(d); }

inline Direction Clockwise(Direction d, int quarter_turns = 1) {
  return static_cast<Direction>(((Index(d) + quarter_turns) % 4 + 4) % 4);
}

inline Direction Opposite(Direction d) { return Clockwise(d, 2); }

inline bool IsVertical(Direction d) {
  return d == Direction::kNorth || d == Direction::kSouth;
}

inline const char* DirectionName(Direction d) {
  switch (d) {
    case Direction::kNorth:
      return "North";
    case Direction::kEast:
      return "East";
    case Direction::kSouth:
      return "South";
    case Direction::kWest:
      return "West";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Direction d) {
  return os << DirectionName(d);
}

// Direction of the axis-parallel step from `from` to `to`. The points must
// differ in exactly one coordinate.
inline Direction DirectionBetween(GridPoint from, GridPoint to) {
  if (from.x == to.x && from.y < to.y) return Direction::kNorth;
  if (from.x == to.x && from.y > to.y) return Direction::kSouth;
  if (from.y == to.y && from.x < to.x) return Direction::kEast;
  if (from.y == to.y && from.x > to.x) return Direction::kWest;
  throw std::invalid_argument("points are not axis-aligned neighbours");
}

// Signed turn in quarter turns: +1 left, -1 right, 0 straight, -2 reversal.
inline int TurnBetween(Direction incoming, Direction outgoing) {
  const int delta = ((Index(outgoing) - Index(incoming)) % 4 + 4) % 4;
  switch (delta) {
    case 0:
      return 0;
    case 1:
      return -1;
    case 3:
      return +1;
    default:
      return -2;
  }
}

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_GEOMETRY_H_
