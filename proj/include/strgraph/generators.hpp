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
/// Deterministic and seeded constructions of curve families and drawings.
///
/// All constructions use integer arithmetic only, so every output is
/// bit-identical for the same parameters and seed.

#ifndef STRGRAPH_GENERATORS_HPP
#define STRGRAPH_GENERATORS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strgraph/curves.hpp"
#include "strgraph/geometry.hpp"
#include "strgraph/random.hpp"

namespace strgraph {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

/// n horizontal unit-spaced segments; the string graph is empty.
inline CurveFamily disjoint_segments(std::size_t n) {
  detail::require(n >= 1, "disjoint_segments needs n >= 1");
  CurveFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    const auto y = static_cast<Coord>(2 * i);
    f.curves.emplace_back(Point{0, y}, Point{10, y});
  }
  return f;
}

inline constexpr std::size_t kMaxStarSize = 360;

/// n segments with distinct slopes that pairwise cross; the string graph is K_n.
///
/// Segment k lies on y = (2nk / A) x + k^2 for |x| <= A. Lines j and k meet at
/// (-A (j + k) / 2n, -j k), strictly inside both segments, and no two pairs
/// share a crossing point.
inline CurveFamily pairwise_crossing_star(std::size_t n) {
  detail::require(n >= 2 && n <= kMaxStarSize, "pairwise_crossing_star needs 2 <= n <= 360");
  constexpr Coord kHalfWidth = Coord{1} << 20;
  const auto spread = static_cast<Coord>(2 * n);
  CurveFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Coord>(i);
    f.curves.emplace_back(Point{-kHalfWidth, -k * spread + k * k},
                          Point{kHalfWidth, k * spread + k * k});
  }
  return f;
}

/// Flat segments [2i, 2i + 3] on the x-axis; the string graph is the path P_n.
inline CurveFamily interval_path(std::size_t n) {
  detail::require(n >= 2, "interval_path needs n >= 2");
  CurveFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Coord>(2 * i);
    f.curves.emplace_back(Point{x, 0}, Point{x + 3, 0});
  }
  return f;
}

/// r horizontal then c vertical segments, each horizontal crossing each
/// vertical; the string graph is K_{r,c} with parts {0..r-1} and {r..r+c-1}.
inline CurveFamily grid_biclique(std::size_t r, std::size_t c) {
  detail::require(r >= 1 && c >= 1, "grid_biclique needs r, c >= 1");
  CurveFamily f;
  const auto width = static_cast<Coord>(2 * c);
  const auto height = static_cast<Coord>(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto y = static_cast<Coord>(2 * i + 1);
    f.curves.emplace_back(Point{0, y}, Point{width, y});
  }
  for (std::size_t j = 0; j < c; ++j) {
    const auto x = static_cast<Coord>(2 * j + 1);
    f.curves.emplace_back(Point{x, 0}, Point{x, height});
  }
  return f;
}

inline constexpr std::size_t kMaxCycleSize = 1000;

/// Sides of the convex polygon on (20 i, 20 i^2), each extended by 5% past
/// both corners; consecutive sides meet at their common corner and no others
/// meet, so the string graph is the cycle C_n.
inline CurveFamily polygon_cycle(std::size_t n) {
  detail::require(n >= 3 && n <= kMaxCycleSize, "polygon_cycle needs 3 <= n <= 1000");
  constexpr Coord kScale = 20;
  auto corner = [&](std::size_t i) {
    const auto k = static_cast<Coord>(i % n);
    return Point{kScale * k, kScale * k * k};
  };
  CurveFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = corner(i);
    const Point q = corner(i + 1);
    const Point step{(q.x - p.x) / kScale, (q.y - p.y) / kScale};
    f.curves.emplace_back(Point{p.x - step.x, p.y - step.y}, Point{q.x + step.x, q.y + step.y});
  }
  return f;
}

/// n random segments with endpoints in [0, span)^2.
///
/// Draw order per segment: a.x, a.y, then b.x, b.y. With max_length = 0 the
/// second endpoint is uniform in the square; otherwise b = a + (dx, dy) with
/// dx, dy each below(2 L + 1) - L. A second endpoint equal to the first is
/// redrawn.
inline CurveFamily random_segments(std::size_t n, std::uint64_t span, Seed seed,
                                   std::uint64_t max_length = 0) {
  detail::require(n >= 1, "random_segments needs n >= 1");
  detail::require(span >= 4 * n, "random_segments needs span >= 4n");
  detail::require(span + max_length <= static_cast<std::uint64_t>(kCoordinateLimit),
                  "random_segments span exceeds the coordinate bound");
  SplitMix64 rng(seed);
  CurveFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a{static_cast<Coord>(rng.below(span)), static_cast<Coord>(rng.below(span))};
    Point b = a;
    while (b == a) {
      if (max_length == 0) {
        b = {static_cast<Coord>(rng.below(span)), static_cast<Coord>(rng.below(span))};
      } else {
        const auto l = static_cast<Coord>(max_length);
        const auto width = 2 * max_length + 1;
        b = {a.x + static_cast<Coord>(rng.below(width)) - l,
             a.y + static_cast<Coord>(rng.below(width)) - l};
      }
    }
    f.curves.emplace_back(a, b);
  }
  return f;
}

inline constexpr std::size_t kMaxConvexDrawingSize = 64;

/// Straight-line K_n on the points (i, i^2), which are in strictly convex
/// position (verified exactly). Edges are listed in lexicographic order.
inline Drawing convex_drawing(std::size_t n) {
  detail::require(n >= 3 && n <= kMaxConvexDrawingSize, "convex_drawing needs 3 <= n <= 64");
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Coord>(i);
    points.push_back({k, k * k});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points[i];
    const Point& q = points[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(p, q, points[j]) <= 0) throw std::logic_error("convex position violated");
    }
  }
  std::vector<DrawnEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, Polyline(points[u], points[v])});
  }
  return Drawing(std::move(points), std::move(edges));
}

/// Default square side for random drawings: 64 n^2, at least 1024.
inline std::uint64_t default_drawing_span(std::size_t n) {
  return std::max<std::uint64_t>(1024, 64 * static_cast<std::uint64_t>(n) * n);
}

inline constexpr std::size_t kMaxPointAttempts = 1000;

/// n points in [0, span)^2, no two equal and no three collinear. Each point
/// is drawn as (below(span), below(span)) and redrawn on conflict, at most
/// 1000 times.
inline std::vector<Point> general_position_points(std::size_t n, std::uint64_t span,
                                                  SplitMix64& rng) {
  detail::require(span <= static_cast<std::uint64_t>(kCoordinateLimit),
                  "point span exceeds the coordinate bound");
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kMaxPointAttempts && !placed; ++attempt) {
      const Point p{static_cast<Coord>(rng.below(span)), static_cast<Coord>(rng.below(span))};
      placed = true;
      for (std::size_t a = 0; a < points.size() && placed; ++a) {
        if (points[a] == p) placed = false;
        for (std::size_t b = a + 1; b < points.size() && placed; ++b) {
          if (orient(points[a], points[b], p) == 0) placed = false;
        }
      }
      if (placed) points.push_back(p);
    }
    if (!placed) {
      throw std::runtime_error("no general-position point after 1000 attempts; span " +
                               std::to_string(span) + " too small");
    }
  }
  return points;
}

namespace detail {

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace detail

/// n general-position points and m distinct straight edges: the first m
/// pairs of a shuffled lexicographic pair list, re-sorted.
inline Drawing random_drawing(std::size_t n, std::size_t m, Seed seed,
                              std::uint64_t span = 0) {
  detail::require(n >= 2, "random_drawing needs n >= 2");
  detail::require(m <= n * (n - 1) / 2, "random_drawing needs m <= n(n-1)/2");
  SplitMix64 rng(seed);
  auto points = general_position_points(n, span ? span : default_drawing_span(n), rng);
  auto pairs = detail::all_pairs(n);
  rng.shuffle(pairs);
  pairs.resize(m);
  std::sort(pairs.begin(), pairs.end());
  std::vector<DrawnEdge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, Polyline(points[u], points[v])});
  return Drawing(std::move(points), std::move(edges));
}

/// Crossing-free straight-line drawing: shuffled point pairs are inserted
/// when they cross no edge accepted so far, until max_edges are accepted
/// (0 = no cap, which yields a triangulation of the point set).
inline Drawing random_plane_drawing(std::size_t n, Seed seed, std::size_t max_edges = 0,
                                    std::uint64_t span = 0) {
  detail::require(n >= 2, "random_plane_drawing needs n >= 2");
  SplitMix64 rng(seed);
  auto points = general_position_points(n, span ? span : default_drawing_span(n), rng);
  auto pairs = detail::all_pairs(n);
  rng.shuffle(pairs);
  std::vector<DrawnEdge> edges;
  for (auto [u, v] : pairs) {
    if (max_edges != 0 && edges.size() >= max_edges) break;
    DrawnEdge candidate{u, v, Polyline(points[u], points[v])};
    const bool crosses = std::any_of(edges.begin(), edges.end(), [&](const DrawnEdge& e) {
      std::vector<Point> shared;
      for (Vertex a : {u, v})
        if (a == e.u || a == e.v) shared.push_back(points[a]);
      return open_edges_intersect(candidate.curve, e.curve, shared);
    });
    if (!crosses) edges.push_back(std::move(candidate));
  }
  std::sort(edges.begin(), edges.end(), [](const DrawnEdge& l, const DrawnEdge& r) {
    return std::pair(l.u, l.v) < std::pair(r.u, r.v);
  });
  return Drawing(std::move(points), std::move(edges));
}

}  // namespace strgraph

#endif  // STRGRAPH_GENERATORS_HPP
