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


#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "orthocompact/errors.h"
#include "orthocompact/io.h"

namespace orthocompact {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int64_t ParseInteger(const Token& token, int line) {
  int64_t value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, token.column,
                     "expected an integer, got '" + std::string(token.text) +
                         "'");
  }
  return value;
}

int ParseId(const Token& token, int line) {
  const int64_t value = ParseInteger(token, line);
  if (value < 0 || value > std::numeric_limits<int>::max()) {
    throw ParseError(line, token.column, "id out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

OrthoDrawing ParseOgdUnchecked(std::string_view text) {
  OrthoDrawing drawing;
  std::unordered_set<VertexId> vertex_ids;
  std::unordered_set<EdgeId> edge_ids;
  bool seen_header = false;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_number;
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const Token& tag = tokens[0];
    if (!seen_header) {
      if (tag.text != "OGD" || tokens.size() != 2 || tokens[1].text != "1") {
        throw ParseError(line_number, tag.column, "expected header 'OGD 1'");
      }
      seen_header = true;
      continue;
    }
    if (tag.text == "V") {
      if (tokens.size() != 4) {
        throw ParseError(line_number, tag.column,
                         "vertex line needs 'V <id> <x> <y>'");
      }
      Vertex v;
      v.id = ParseId(tokens[1], line_number);
      v.pos = {ParseInteger(tokens[2], line_number),
               ParseInteger(tokens[3], line_number)};
      if (!vertex_ids.insert(v.id).second) {
        throw ParseError(line_number, tokens[1].column,
                         "duplicate vertex id " + std::to_string(v.id));
      }
      drawing.vertices.push_back(v);
    } else if (tag.text == "E") {
      if (tokens.size() < 4 || tokens.size() % 2 != 0) {
        throw ParseError(line_number, tag.column,
                         "edge line needs 'E <id> <u> <v>' and coordinate "
                         "pairs");
      }
      Edge e;
      e.id = ParseId(tokens[1], line_number);
      e.source = ParseId(tokens[2], line_number);
      e.target = ParseId(tokens[3], line_number);
      for (size_t k = 4; k < tokens.size(); k += 2) {
        e.bends.push_back({ParseInteger(tokens[k], line_number),
                           ParseInteger(tokens[k + 1], line_number)});
      }
      if (!edge_ids.insert(e.id).second) {
        throw ParseError(line_number, tokens[1].column,
                         "duplicate edge id " + std::to_string(e.id));
      }
      drawing.edges.push_back(std::move(e));
    } else {
      throw ParseError(line_number, tag.column,
                       "unknown record '" + std::string(tag.text) + "'");
    }
  }
  if (!seen_header) throw ParseError(1, 1, "missing header 'OGD 1'");
  return drawing;
}

OrthoDrawing ParseOgd(std::string_view text) {
  OrthoDrawing drawing = Canonicalized(ParseOgdUnchecked(text));
  ValidateOrThrow(drawing);
  return drawing;
}

std::string SerializeOgd(const OrthoDrawing& drawing) {
  std::ostringstream out;
  out << "OGD 1\n";
  for (const Vertex& v : drawing.vertices) {
    out << "V " << v.id << ' ' << v.pos.x << ' ' << v.pos.y << '\n';
  }
  for (const Edge& e : drawing.edges) {
    out << "E " << e.id << ' ' << e.source << ' ' << e.target;
    for (const GridPoint& b : e.bends) out << ' ' << b.x << ' ' << b.y;
    out << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace orthocompact
