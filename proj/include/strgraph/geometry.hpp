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
/// Exact predicates on integer points, segments and polylines.
///
/// Every coordinate is an integer with magnitude at most kCoordinateLimit.
/// Determinants are evaluated in 128-bit arithmetic, so no predicate here can
/// overflow or round.

#ifndef STRGRAPH_GEOMETRY_HPP
#define STRGRAPH_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace strgraph {

using Coord = std::int64_t;

inline constexpr Coord kCoordinateLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline bool in_coordinate_range(const Point& p) {
  return p.x >= -kCoordinateLimit && p.x <= kCoordinateLimit &&
         p.y >= -kCoordinateLimit && p.y <= kCoordinateLimit;
}

inline void require_in_range(const Point& p) {
  if (!in_coordinate_range(p)) {
    throw std::invalid_argument("coordinate (" + std::to_string(p.x) + "," +
                                std::to_string(p.y) +
                                ") exceeds the 2^30 magnitude bound");
  }
}

struct Segment {
  Point a;
  Point b;

  friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

/// A curve: an open chain of at least two points, consecutive points distinct.
class Polyline {
 public:
  Polyline() = default;

  explicit Polyline(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) {
      throw std::invalid_argument("polyline needs at least two vertices");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      require_in_range(vertices_[i]);
      if (i > 0 && vertices_[i] == vertices_[i - 1]) {
        throw std::invalid_argument("polyline has repeated consecutive vertex");
      }
    }
  }

  Polyline(Point a, Point b) : Polyline(std::vector<Point>{a, b}) {}

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t segment_count() const {
    return vertices_.empty() ? 0 : vertices_.size() - 1;
  }
  Segment segment(std::size_t i) const { return {vertices_[i], vertices_[i + 1]}; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<Point> vertices_;
};

namespace detail {

using Wide = __int128;

inline Wide cross(const Point& p, const Point& q, const Point& r) {
  return static_cast<Wide>(q.x - p.x) * static_cast<Wide>(r.y - p.y) -
         static_cast<Wide>(q.y - p.y) * static_cast<Wide>(r.x - p.x);
}

inline bool box_contains(const Segment& s, const Point& p) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

struct Box {
  Coord xmin, ymin, xmax, ymax;
};

inline Box bounding_box(const Segment& s) {
  return {std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.x, s.b.x),
          std::max(s.a.y, s.b.y)};
}

inline bool boxes_overlap(const Box& l, const Box& r) {
  return l.xmin <= r.xmax && r.xmin <= l.xmax && l.ymin <= r.ymax && r.ymin <= l.ymax;
}

}  // namespace detail

/// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
  const auto c = detail::cross(p, q, r);
  return (c > 0) - (c < 0);
}

/// True iff p lies on the closed segment s.
inline bool on_segment(const Point& p, const Segment& s) {
  return orient(s.a, s.b, p) == 0 && detail::box_contains(s, p);
}

/// Closed-segment intersection: touching endpoints and collinear overlap count.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  if (!detail::boxes_overlap(detail::bounding_box(s1), detail::bounding_box(s2))) {
    return false;
  }
  const int o1 = orient(s1.a, s1.b, s2.a);
  const int o2 = orient(s1.a, s1.b, s2.b);
  const int o3 = orient(s2.a, s2.b, s1.a);
  const int o4 = orient(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && detail::box_contains(s1, s2.a)) ||
         (o2 == 0 && detail::box_contains(s1, s2.b)) ||
         (o3 == 0 && detail::box_contains(s2, s1.a)) ||
         (o4 == 0 && detail::box_contains(s2, s1.b));
}

/// True iff the segments are collinear and share a sub-segment of positive length.
inline bool segments_overlap(const Segment& s1, const Segment& s2) {
  if (orient(s1.a, s1.b, s2.a) != 0 || orient(s1.a, s1.b, s2.b) != 0) return false;
  // Project on the dominant axis of s1; collinearity makes this exact.
  const bool use_x = s1.a.x != s1.b.x;
  auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
  const Coord lo1 = std::min(key(s1.a), key(s1.b));
  const Coord hi1 = std::max(key(s1.a), key(s1.b));
  const Coord lo2 = std::min(key(s2.a), key(s2.b));
  const Coord hi2 = std::max(key(s2.a), key(s2.b));
  return std::min(hi1, hi2) > std::max(lo1, lo2);
}

inline bool polylines_intersect(const Polyline& c1, const Polyline& c2) {
  for (std::size_t i = 0; i < c1.segment_count(); ++i) {
    const Segment s = c1.segment(i);
    for (std::size_t j = 0; j < c2.segment_count(); ++j) {
      if (segments_intersect(s, c2.segment(j))) return true;
    }
  }
  return false;
}

/// Intersection test for curves with some shared endpoints removed.
///
/// Returns true iff c1 and c2 have a common point that is not listed in
/// shared_endpoints. Two segments meeting in a single point meet exactly at a
/// listed point p iff p lies on both of them; any positive-length overlap
/// always contains an unlisted point.
inline bool open_edges_intersect(const Polyline& c1, const Polyline& c2,
                                 std::span<const Point> shared_endpoints) {
  for (std::size_t i = 0; i < c1.segment_count(); ++i) {
    const Segment s = c1.segment(i);
    for (std::size_t j = 0; j < c2.segment_count(); ++j) {
      const Segment r = c2.segment(j);
      if (!segments_intersect(s, r)) continue;
      if (segments_overlap(s, r)) return true;
      const bool at_removed = std::any_of(
          shared_endpoints.begin(), shared_endpoints.end(),
          [&](const Point& p) { return on_segment(p, s) && on_segment(p, r); });
      if (!at_removed) return true;
    }
  }
  return false;
}

}  // namespace strgraph

#endif  // STRGRAPH_GEOMETRY_HPP
