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


#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "orthocompact/io.h"

namespace orthocompact {

std::string RenderSvg(const OrthoDrawing& drawing, const SvgOptions& options) {
  Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto extend = [&](GridPoint p) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const Vertex& v : drawing.vertices) extend(v.pos);
  for (const Edge& e : drawing.edges) {
    for (const GridPoint& b : e.bends) extend(b);
  }
  const Coord scale = options.scale;
  const Coord margin = options.margin;
  const Coord width = (max_x - min_x) * scale + 2 * margin;
  const Coord height = (max_y - min_y) * scale + 2 * margin;
  // SVG y grows downwards.
  auto sx = [&](Coord x) { return (x - min_x) * scale + margin; };
  auto sy = [&](Coord y) { return (max_y - y) * scale + margin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n"
      << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << options.stroke_width << "\" stroke-linejoin=\"round\">\n";
  const auto positions = drawing.PositionsById();
  for (const Edge& e : drawing.edges) {
    const bool highlighted = options.highlight.contains(e.id);
    out << "<polyline";
    if (highlighted) out << " class=\"highlight\" stroke=\"#d62728\"";
    out << " data-edge=\"" << e.id << "\" points=\"";
    bool leading = true;
    for (const GridPoint& p : drawing.Polyline(e)) {
      if (!leading) out << ' ';
      out << sx(p.x) << ',' << sy(p.y);
      leading = false;
    }
    out << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#000000\">\n";
  for (const Vertex& v : drawing.vertices) {
    out << "<circle data-vertex=\"" << v.id << "\" cx=\"" << sx(v.pos.x)
        << "\" cy=\"" << sy(v.pos.y) << "\" r=\"" << options.vertex_radius
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::set<EdgeId> EdgesWithNewBends(const OrthoDrawing& before,
                                   const OrthoDrawing& after) {
  std::map<EdgeId, size_t> bends_before;
  for (const Edge& e : before.edges) bends_before[e.id] = e.bends.size();
  std::set<EdgeId> changed;
  for (const Edge& e : after.edges) {
    const auto it = bends_before.find(e.id);
    const size_t old = it == bends_before.end() ? 0 : it->second;
    if (e.bends.size() > old) changed.insert(e.id);
  }
  return changed;
}

}  // namespace orthocompact
