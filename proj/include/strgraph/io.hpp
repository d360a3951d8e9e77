// Copyright 2026 The strgraph Authors
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

/// \file
/// Text formats for curve families, graphs, drawings and labelled vertex sets.
///
///   curve family   one curve per line:  `id: x1,y1 x2,y2 ...`
///   graph          header `n m`, then one `u v` line per edge, u < v
///   drawing        `[points]` with `id: x,y` lines, then `[edges]` with
///                  `u v: x1,y1 x2,y2 ...` lines
///   labelled sets  `LABEL: v1 v2 ...`, e.g. `S:`, `V1:`, `V2:`
///
/// Lines starting with `#` and blank lines are ignored everywhere. Curve and
/// point ids must be exactly 0..k-1, in any order.

#ifndef STRGRAPH_IO_HPP
#define STRGRAPH_IO_HPP

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strgraph/curves.hpp"
#include "strgraph/graph.hpp"

namespace strgraph {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line) {
  Int value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline Point parse_point(std::string_view token, std::size_t line) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(line, "expected x,y, got '" + std::string(token) + "'");
  }
  Point p{parse_int<Coord>(token.substr(0, comma), line),
          parse_int<Coord>(token.substr(comma + 1), line)};
  if (!in_coordinate_range(p)) throw ParseError(line, "coordinate exceeds 2^30");
  return p;
}

inline Polyline parse_polyline(std::string_view text, std::size_t line) {
  std::vector<Point> points;
  for (auto token : split_ws(text)) points.push_back(parse_point(token, line));
  try {
    return Polyline(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

/// Numbered content lines of a text, comments and blanks removed.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

template <class T>
std::vector<T> densify(std::map<std::size_t, T> by_id, std::size_t last_line,
                       const char* what) {
  std::vector<T> out;
  std::size_t expected = 0;
  for (auto& [id, value] : by_id) {
    if (id != expected) {
      throw ParseError(last_line, std::string(what) + " ids must be 0..k-1; missing " +
                                      std::to_string(expected));
    }
    out.push_back(std::move(value));
    ++expected;
  }
  return out;
}

template <class T>
void insert_unique(std::map<std::size_t, T>& by_id, std::size_t id, T value,
                   std::size_t line) {
  if (!by_id.emplace(id, std::move(value)).second) {
    throw ParseError(line, "duplicate id " + std::to_string(id));
  }
}

}  // namespace detail

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("error writing " + path);
}

// ---- curve families --------------------------------------------------------

inline CurveFamily parse_curve_family(std::string_view text) {
  std::map<std::size_t, Polyline> by_id;
  std::size_t last = 0;
  for (auto [number, line] : detail::content_lines(text)) {
    last = number;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'id: points'");
    const auto id = detail::parse_int<std::size_t>(detail::trim(line.substr(0, colon)), number);
    detail::insert_unique(by_id, id, detail::parse_polyline(line.substr(colon + 1), number),
                          number);
  }
  return {detail::densify(std::move(by_id), last, "curve")};
}

inline std::string format_polyline(const Polyline& c) {
  std::string out;
  for (const auto& p : c.vertices()) {
    out += ' ';
    out += std::to_string(p.x) + ',' + std::to_string(p.y);
  }
  return out;
}

inline std::string format_curve_family(const CurveFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    out += std::to_string(i) + ':' + format_polyline(family.curves[i]) + '\n';
  }
  return out;
}

// ---- graphs ---------------------------------------------------------------

inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const auto header = detail::split_ws(lines.front().second);
  if (header.size() != 2) throw ParseError(lines.front().first, "header must be 'n m'");
  const auto n = detail::parse_int<std::size_t>(header[0], lines.front().first);
  const auto m = detail::parse_int<std::size_t>(header[1], lines.front().first);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().first, "header announces " + std::to_string(m) +
                                             " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) throw ParseError(number, "edge line must be 'u v'");
    const auto u = detail::parse_int<Vertex>(tokens[0], number);
    const auto v = detail::parse_int<Vertex>(tokens[1], number);
    if (u >= v) throw ParseError(number, "edge must satisfy u < v");
    if (v >= n) throw ParseError(number, "vertex out of range");
    edges.emplace_back(u, v);
  }
  seen = edges;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ParseError(lines.back().first, "duplicate edge");
  }
  return Graph(n, edges);
}

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.size()) + '\n';
  for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

// ---- drawings -------------------------------------------------------------

inline Drawing parse_drawing(std::string_view text) {
  enum class Section { kNone, kPoints, kEdges } section = Section::kNone;
  std::map<std::size_t, Point> points;
  std::vector<DrawnEdge> edges;
  std::size_t last = 0;
  for (auto [number, line] : detail::content_lines(text)) {
    last = number;
    if (line == "[points]") {
      section = Section::kPoints;
      continue;
    }
    if (line == "[edges]") {
      section = Section::kEdges;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected ':'");
    const auto head = detail::trim(line.substr(0, colon));
    const auto body = detail::trim(line.substr(colon + 1));
    if (section == Section::kPoints) {
      detail::insert_unique(points, detail::parse_int<std::size_t>(head, number),
                            detail::parse_point(body, number), number);
    } else if (section == Section::kEdges) {
      const auto ends = detail::split_ws(head);
      if (ends.size() != 2) throw ParseError(number, "edge head must be 'u v'");
      edges.push_back({detail::parse_int<Vertex>(ends[0], number),
                       detail::parse_int<Vertex>(ends[1], number),
                       detail::parse_polyline(body, number)});
    } else {
      throw ParseError(number, "content before [points] section");
    }
  }
  auto dense = detail::densify(std::move(points), last, "point");
  try {
    return Drawing(std::move(dense), std::move(edges));
  } catch (const std::logic_error& e) {
    throw ParseError(last, std::string("invalid drawing: ") + e.what());
  }
}

inline std::string format_drawing(const Drawing& drawing) {
  std::string out = "[points]\n";
  for (std::size_t i = 0; i < drawing.vertex_count(); ++i) {
    const auto& p = drawing.points()[i];
    out += std::to_string(i) + ": " + std::to_string(p.x) + ',' + std::to_string(p.y) + '\n';
  }
  out += "[edges]\n";
  for (const auto& e : drawing.edges()) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ':' + format_polyline(e.curve) +
           '\n';
  }
  return out;
}

// ---- labelled vertex sets ---------------------------------------------------

inline std::string format_labelled_set(std::string_view label, std::span<const Vertex> set) {
  std::string out(label);
  out += ':';
  for (Vertex v : set) out += ' ' + std::to_string(v);
  out += '\n';
  return out;
}

/// Reads `LABEL: v ...` lines into a map from label to set.
inline std::map<std::string, VertexSet> parse_labelled_sets(std::string_view text) {
  std::map<std::string, VertexSet> out;
  for (auto [number, line] : detail::content_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'LABEL: ...'");
    VertexSet set;
    for (auto token : detail::split_ws(line.substr(colon + 1))) {
      set.push_back(detail::parse_int<Vertex>(token, number));
    }
    out[std::string(detail::trim(line.substr(0, colon)))] = std::move(set);
  }
  return out;
}

// ---- format detection -------------------------------------------------------

enum class FileKind { kCurveFamily, kGraph, kDrawing };

/// Drawings start with a `[points]` section, curve families with `id:` lines,
/// and graphs with the `n m` header.
inline FileKind detect_file_kind(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) return FileKind::kGraph;
  const auto first = lines.front().second;
  if (first == "[points]") return FileKind::kDrawing;
  if (first.find(':') != std::string_view::npos) return FileKind::kCurveFamily;
  return FileKind::kGraph;
}

}  // namespace strgraph

#endif  // STRGRAPH_IO_HPP
