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
/// Curve families, topological drawings, and the intersection graphs built
/// from them.

#ifndef STRGRAPH_CURVES_HPP
#define STRGRAPH_CURVES_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strgraph/geometry.hpp"
#include "strgraph/graph.hpp"

namespace strgraph {

/// Curve i is the string of vertex i.
struct CurveFamily {
  std::vector<Polyline> curves;

  std::size_t size() const { return curves.size(); }
  friend bool operator==(const CurveFamily&, const CurveFamily&) = default;
};

struct DrawnEdge {
  Vertex u = 0;
  Vertex v = 0;
  Polyline curve;

  friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
};

/// A topological graph: one point per vertex and one polyline per edge.
///
/// The constructor enforces that each curve runs from points[u] to points[v],
/// that no curve passes through a vertex point other than its own endpoints,
/// and that the underlying graph is simple.
class Drawing {
 public:
  Drawing() = default;

  Drawing(std::vector<Point> points, std::vector<DrawnEdge> edges)
      : points_(std::move(points)), edges_(std::move(edges)) {
    validate();
  }

  const std::vector<Point>& points() const { return points_; }
  const std::vector<DrawnEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// The abstract graph being drawn.
  Graph graph() const {
    std::vector<Edge> list;
    list.reserve(edges_.size());
    for (const auto& e : edges_) list.emplace_back(e.u, e.v);
    return Graph(points_.size(), list);
  }

  /// Points of the drawing vertices shared by edges i and j.
  std::vector<Point> shared_endpoints(std::size_t i, std::size_t j) const {
    std::vector<Point> out;
    const auto& e = edges_[i];
    const auto& f = edges_[j];
    for (Vertex a : {e.u, e.v}) {
      if (a == f.u || a == f.v) out.push_back(points_[a]);
    }
    return out;
  }

  /// True iff the open curves of edges i and j meet.
  bool edges_cross(std::size_t i, std::size_t j) const {
    const auto shared = shared_endpoints(i, j);
    return open_edges_intersect(edges_[i].curve, edges_[j].curve, shared);
  }

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  void validate() const {
    const std::set<Point> distinct(points_.begin(), points_.end());
    if (distinct.size() != points_.size()) {
      throw std::invalid_argument("drawing has two vertices at the same point");
    }
    for (const auto& p : points_) require_in_range(p);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(e.u) +
                                "," + std::to_string(e.v) + ")";
      if (e.u >= points_.size() || e.v >= points_.size()) {
        throw std::out_of_range(where + " references a missing vertex");
      }
      if (e.u == e.v) throw std::invalid_argument(where + " is a loop");
      if (!seen.insert(std::minmax(e.u, e.v)).second) {
        throw std::invalid_argument(where + " duplicates an earlier edge");
      }
      if (e.curve.segment_count() == 0 || e.curve.front() != points_[e.u] ||
          e.curve.back() != points_[e.v]) {
        throw std::invalid_argument(where + " curve does not join its endpoints");
      }
      for (Vertex w = 0; w < points_.size(); ++w) {
        if (w == e.u || w == e.v) continue;
        for (std::size_t s = 0; s < e.curve.segment_count(); ++s) {
          if (on_segment(points_[w], e.curve.segment(s))) {
            throw std::invalid_argument(where + " passes through vertex " +
                                        std::to_string(w));
          }
        }
      }
    }
  }

  std::vector<Point> points_;
  std::vector<DrawnEdge> edges_;
};

namespace detail {

inline Box bounding_box(const Polyline& c) {
  Box box{c.front().x, c.front().y, c.front().x, c.front().y};
  for (const auto& p : c.vertices()) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

}  // namespace detail

/// Intersection graph of the family under closed-curve semantics.
///
/// With `box_filter` set, pairs whose bounding boxes are disjoint are skipped
/// without running the segment tests; the result is the same either way.
inline Graph build_string_graph(const CurveFamily& family, bool box_filter = true) {
  const std::size_t n = family.size();
  std::vector<detail::Box> boxes;
  if (box_filter) {
    boxes.reserve(n);
    for (const auto& c : family.curves) boxes.push_back(detail::bounding_box(c));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (box_filter && !detail::boxes_overlap(boxes[u], boxes[v])) continue;
      if (polylines_intersect(family.curves[u], family.curves[v])) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Crossing graph of a drawing: vertex i is edge i of the drawing, and two
/// are adjacent iff their curves meet away from common endpoints.
inline Graph build_edge_crossing_graph(const Drawing& drawing) {
  const std::size_t m = drawing.edge_count();
  std::vector<detail::Box> boxes;
  boxes.reserve(m);
  for (const auto& e : drawing.edges()) boxes.push_back(detail::bounding_box(e.curve));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      if (!detail::boxes_overlap(boxes[i], boxes[j])) continue;
      if (drawing.edges_cross(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(m, edges);
}

}  // namespace strgraph

#endif  // STRGRAPH_CURVES_HPP
