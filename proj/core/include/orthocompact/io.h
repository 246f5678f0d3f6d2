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


// The .ogd drawing format, SVG rendering and line-delimited JSON records.
//
//   OGD 1
//   # comment
//   V <id> <x> <y>
//   E <id> <source> <target> [<x1> <y1> ...]   bends listed source to target

#ifndef ORTHOCOMPACT_IO_H_
#define ORTHOCOMPACT_IO_H_

#include <set>
#include <string>
#include <string_view>

#include "orthocompact/driver.h"
#include "orthocompact/model.h"

namespace orthocompact {

// Syntax only: throws ParseError for malformed lines, duplicate ids or a
// missing header. The result may violate Validate().
OrthoDrawing ParseOgdUnchecked(std::string_view text);

// ParseOgdUnchecked, then Canonicalized, then ValidateOrThrow.
OrthoDrawing ParseOgd(std::string_view text);

std::string SerializeOgd(const OrthoDrawing& drawing);

// Throws std::runtime_error when the file cannot be read or written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

struct SvgOptions {
  int scale = 40;  // pixels per grid unit
  int margin = 20;
  int vertex_radius = 4;
  int stroke_width = 2;
  std::set<EdgeId> highlight;  // drawn in red
};

std::string RenderSvg(const OrthoDrawing& drawing,
                      const SvgOptions& options = {});

// Ids of edges of `after` with more bends than the same edge in `before`.
std::set<EdgeId> EdgesWithNewBends(const OrthoDrawing& before,
                                   const OrthoDrawing& after);

struct MetricsRecord {
  std::string instance;
  std::string mode;  // "input", "trad" or "ff"
  int iterations = 0;
  Metrics metrics;
  int dissection_edges = 0;
  double wall_time_ms = 0;
};

// One JSON object, no trailing newline.
std::string ToJsonLine(const MetricsRecord& record);
MetricsRecord MetricsRecordFromJson(std::string_view line);

// A "compare" record with the percentage fields of the report.
std::string ComparisonJsonLine(const std::string& instance,
                               const ComparisonReport& report);

// Records for the input, TRAD and FF runs followed by the comparison line,
// each newline-terminated.
std::string ComparisonJsonLines(const std::string& instance,
                                const ComparisonReport& report);

std::string TraceJsonLines(const std::string& instance, const RunTrace& trace);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_IO_H_
