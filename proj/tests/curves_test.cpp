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

#include "strgraph/curves.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strgraph/generators.hpp"

namespace strgraph {
namespace {

Graph oracle_string_graph(const CurveFamily& f) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < f.size(); ++u)
    for (Vertex v = u + 1; v < f.size(); ++v)
      if (oracle::polylines_meet(f.curves[u], f.curves[v])) edges.emplace_back(u, v);
  return Graph(f.size(), edges);
}

TEST(BuildStringGraphTest, Examples) {
  // Three segments crossing pairwise at distinct points.
  const CurveFamily triangle{{Polyline({0, 0}, {10, 1}), Polyline({0, 5}, {10, -4}),
                              Polyline({2, -6}, {3, 8})}};
  EXPECT_EQ(build_string_graph(triangle), named::complete(3));
  EXPECT_EQ(build_string_graph(disjoint_segments(5)), named::empty(5));
  const auto path = interval_path(5);
  EXPECT_EQ(build_string_graph(path), named::path(5));
  EXPECT_EQ(build_string_graph(path), oracle_string_graph(path));
}

TEST(BuildStringGraphTest, MultipleIntersectionsGiveOneEdge) {
  const CurveFamily zigzag{{Polyline(std::vector<Point>{{0, 0}, {2, 4}, {4, 0}, {6, 4}}),
                            Polyline({-1, 2}, {7, 2})}};
  const Graph g = build_string_graph(zigzag);
  EXPECT_EQ(g.size(), 1u);
}

TEST(BuildStringGraphTest, BoxFilterDoesNotChangeResult) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = random_segments(60, 400, Seed{seed}, 40);
    const Graph filtered = build_string_graph(f, true);
    EXPECT_EQ(filtered, build_string_graph(f, false));
    EXPECT_EQ(filtered, oracle_string_graph(f));
  }
}

TEST(BuildStringGraphTest, TranslationInvariant) {
  const auto f = random_segments(40, 200, Seed{5}, 30);
  CurveFamily moved;
  for (const auto& c : f.curves) {
    std::vector<Point> pts;
    for (const auto& p : c.vertices()) pts.push_back({p.x - 1000, p.y + 777});
    moved.curves.emplace_back(pts);
  }
  EXPECT_EQ(build_string_graph(f), build_string_graph(moved));
}

Drawing square_with_diagonals() {
  std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  std::vector<DrawnEdge> edges;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) edges.push_back({u, v, Polyline(pts[u], pts[v])});
  return Drawing(pts, edges);
}

TEST(DrawingTest, ValidatesInvariants) {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {4, 0}};
  // Edge 0-2 passes through vertex 1.
  EXPECT_THROW(Drawing(pts, {{0, 2, Polyline(pts[0], pts[2])}}), std::invalid_argument);
  // Bent around vertex 1 instead: fine.
  EXPECT_NO_THROW(Drawing(pts, {{0, 2, Polyline(std::vector<Point>{{0, 0}, {2, 3}, {4, 0}})}}));
  // Curve must start and end at its endpoints.
  EXPECT_THROW(Drawing(pts, {{0, 1, Polyline({0, 0}, {2, 1})}}), std::invalid_argument);
  // Parallel edges and loops are rejected.
  EXPECT_THROW(Drawing(pts, {{0, 1, Polyline(pts[0], pts[1])}, {1, 0, Polyline(pts[1], pts[0])}}),
               std::invalid_argument);
  EXPECT_THROW(Drawing(pts, {{0, 3, Polyline(pts[0], pts[1])}}), std::out_of_range);
  EXPECT_THROW(Drawing({{0, 0}, {0, 0}}, {}), std::invalid_argument);
}

TEST(BuildEdgeCrossingGraphTest, Examples) {
  // Plane drawing: a path of three straight edges.
  const std::vector<Point> pts{{0, 0}, {3, 1}, {6, 0}, {9, 1}};
  const Drawing plane(pts, {{0, 1, Polyline(pts[0], pts[1])},
                            {1, 2, Polyline(pts[1], pts[2])},
                            {2, 3, Polyline(pts[2], pts[3])}});
  EXPECT_EQ(build_edge_crossing_graph(plane), named::empty(3));

  const Graph k4 = build_edge_crossing_graph(square_with_diagonals());
  EXPECT_EQ(k4.order(), 6u);
  EXPECT_EQ(k4.size(), 1u);
  // Edge order: 01 02 03 12 13 23; the diagonals are 02 and 13.
  EXPECT_TRUE(k4.has_edge(1, 4));
}

TEST(BuildEdgeCrossingGraphTest, EveryEdgeIsAGeometricCrossing) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Drawing d = random_drawing(12, 30, Seed{seed});
    const Graph g = build_edge_crossing_graph(d);
    for (Vertex i = 0; i < g.order(); ++i) {
      for (Vertex j = i + 1; j < g.order(); ++j) {
        const auto& e = d.edges()[i];
        const auto& f = d.edges()[j];
        const bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
        // Straight edges in general position: open edges meet iff they share
        // no endpoint and their closed segments meet.
        const bool expected =
            !share && oracle::segments_meet(e.curve.segment(0), f.curve.segment(0));
        EXPECT_EQ(g.has_edge(i, j), expected) << i << " " << j;
      }
    }
  }
}

}  // namespace
}  // namespace strgraph
