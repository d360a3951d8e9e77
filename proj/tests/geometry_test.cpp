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

#include "strgraph/geometry.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "strgraph/random.hpp"

namespace strgraph {
namespace {

Segment seg(Coord ax, Coord ay, Coord bx, Coord by) { return {{ax, ay}, {bx, by}}; }

TEST(OrientTest, Turns) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 0}), -1);
}

TEST(OrientTest, ExtremeCoordinatesDoNotOverflow) {
  const Coord L = kCoordinateLimit;
  EXPECT_EQ(orient({-L, -L}, {L, L}, {L, -L}), -1);
  EXPECT_EQ(orient({-L, -L}, {L, L}, {-L, L}), 1);
  EXPECT_EQ(orient({-L, -L}, {L, L}, {0, 0}), 0);
  // Nearly collinear: the determinant is -1 while each product is about 2^64.
  EXPECT_EQ(orient({-L, -L}, {L, L - 1}, {L - 1, L - 2}), -1);
}

TEST(SegmentsIntersectTest, Examples) {
  EXPECT_TRUE(segments_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  EXPECT_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
  EXPECT_TRUE(segments_intersect(seg(0, 0, 1, 1), seg(1, 1, 2, 0)));
}

TEST(SegmentsIntersectTest, DegenerateConfigurations) {
  EXPECT_TRUE(segments_intersect(seg(0, 0, 4, 0), seg(2, 0, 6, 0)));   // overlap
  EXPECT_TRUE(segments_intersect(seg(0, 0, 4, 0), seg(4, 0, 6, 0)));   // collinear touch
  EXPECT_TRUE(segments_intersect(seg(0, 0, 4, 0), seg(2, 0, 2, 5)));   // T-junction
  EXPECT_FALSE(segments_intersect(seg(0, 0, 4, 0), seg(0, 1, 4, 1)));  // parallel
  EXPECT_FALSE(segments_intersect(seg(0, 0, 4, 4), seg(3, 0, 5, 1)));  // near miss
}

TEST(SegmentsIntersectTest, MatchesRationalSolverOnRandomPairs) {
  SplitMix64 rng(Seed{2024});
  auto coord = [&] { return static_cast<Coord>(rng.below(21)) - 10; };
  int checked = 0;
  while (checked < 5000) {
    const Segment s1{{coord(), coord()}, {coord(), coord()}};
    const Segment s2{{coord(), coord()}, {coord(), coord()}};
    if (s1.a == s1.b || s2.a == s2.b) continue;
    ASSERT_EQ(segments_intersect(s1, s2), oracle::segments_meet(s1, s2))
        << s1.a.x << "," << s1.a.y << " " << s1.b.x << "," << s1.b.y << " vs " << s2.a.x << ","
        << s2.a.y << " " << s2.b.x << "," << s2.b.y;
    EXPECT_EQ(segments_intersect(s1, s2), segments_intersect(s2, s1));
    ++checked;
  }
}

TEST(PolylineTest, RejectsBadVertexLists) {
  EXPECT_THROW(Polyline(std::vector<Point>{{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Polyline(std::vector<Point>{{0, 0}, {0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(Polyline({0, 0}, {kCoordinateLimit + 1, 0}), std::invalid_argument);
  // Collinear consecutive segments are allowed.
  EXPECT_NO_THROW(Polyline(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}));
}

TEST(PolylinesIntersectTest, Examples) {
  EXPECT_TRUE(polylines_intersect(Polyline({0, 0}, {2, 2}), Polyline({0, 2}, {2, 0})));
  EXPECT_FALSE(polylines_intersect(Polyline({0, 0}, {10, 0}), Polyline({0, 5}, {10, 5})));
  const Polyline ell(std::vector<Point>{{0, 0}, {4, 0}, {4, 4}});
  const Polyline stub({2, -1}, {2, 1});
  EXPECT_TRUE(polylines_intersect(ell, stub));
  EXPECT_EQ(polylines_intersect(ell, stub), oracle::polylines_meet(ell, stub));
}

TEST(PolylinesIntersectTest, ReflexiveAndSymmetric) {
  SplitMix64 rng(Seed{7});
  auto pt = [&] {
    return Point{static_cast<Coord>(rng.below(30)), static_cast<Coord>(rng.below(30))};
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> a{pt()}, b{pt()};
    while (a.size() < 4) {
      auto p = pt();
      if (p != a.back()) a.push_back(p);
    }
    while (b.size() < 3) {
      auto p = pt();
      if (p != b.back()) b.push_back(p);
    }
    const Polyline ca(a), cb(b);
    EXPECT_TRUE(polylines_intersect(ca, ca));
    EXPECT_EQ(polylines_intersect(ca, cb), polylines_intersect(cb, ca));
    EXPECT_EQ(polylines_intersect(ca, cb), oracle::polylines_meet(ca, cb));
  }
}

TEST(OpenEdgesIntersectTest, Examples) {
  const Point origin{0, 0};
  const std::vector<Point> shared{origin};
  // Sharing only the removed endpoint.
  EXPECT_FALSE(open_edges_intersect(Polyline(origin, {4, 0}), Polyline(origin, {0, 4}), shared));
  // Diagonals of a convex quadrilateral.
  EXPECT_TRUE(open_edges_intersect(Polyline({0, 0}, {4, 4}), Polyline({4, 0}, {0, 4}), {}));
  // Shares (0,0) and also crosses at (2,2) through a bend.
  const Polyline straight(origin, {4, 4});
  const Polyline bent(std::vector<Point>{{0, 4}, {4, 0}, {0, 0}});
  EXPECT_TRUE(open_edges_intersect(straight, bent, shared));
}

TEST(OpenEdgesIntersectTest, OverlapAtSharedEndpointStillCounts) {
  const Point origin{0, 0};
  const std::vector<Point> shared{origin};
  // Collinear overlap leaving the shared endpoint: infinitely many common points.
  EXPECT_TRUE(open_edges_intersect(Polyline(origin, {4, 0}), Polyline(origin, {2, 0}), shared));
  // Touching another edge's interior away from the shared point counts.
  EXPECT_TRUE(open_edges_intersect(Polyline(origin, {4, 0}),
                                   Polyline(std::vector<Point>{origin, {2, 2}, {2, 0}}), shared));
}

TEST(OpenEdgesIntersectTest, ImpliesClosedIntersection) {
  SplitMix64 rng(Seed{99});
  auto pt = [&] {
    return Point{static_cast<Coord>(rng.below(12)), static_cast<Coord>(rng.below(12))};
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const Point p = pt();
    Point q = pt(), r = pt();
    if (q == p || r == p || q == r) continue;
    const Polyline a(p, q), b(p, r);
    const std::vector<Point> shared{p};
    if (open_edges_intersect(a, b, shared)) {
      EXPECT_TRUE(polylines_intersect(a, b));
      // Two segments from a common point meet elsewhere only when collinear.
      EXPECT_EQ(orient(p, q, r), 0);
    }
  }
}

}  // namespace
}  // namespace strgraph
