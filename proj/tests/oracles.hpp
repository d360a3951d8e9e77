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

// Independent reference implementations used only by the tests. None of
// these call into the library's algorithms; they work from first principles
// (exact rationals, subset enumeration, union-find).

#ifndef STRGRAPH_TESTS_ORACLES_HPP
#define STRGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "strgraph/geometry.hpp"
#include "strgraph/graph.hpp"

namespace strgraph::oracle {

/// Exact rational with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
  friend bool operator<(Rational a, Rational b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  std::int64_t num_;
  std::int64_t den_;
};

/// Solves a + s (b - a) = c + u (d - c) over the rationals; closed segments.
inline bool segments_meet(const Segment& p, const Segment& q) {
  const std::int64_t rx = p.b.x - p.a.x, ry = p.b.y - p.a.y;
  const std::int64_t sx = q.b.x - q.a.x, sy = q.b.y - q.a.y;
  const std::int64_t wx = q.a.x - p.a.x, wy = q.a.y - p.a.y;
  const std::int64_t denom = rx * sy - ry * sx;
  const Rational zero(0), one(1);
  if (denom != 0) {
    const Rational s(wx * sy - wy * sx, denom);
    const Rational u(wx * ry - wy * rx, denom);
    return zero <= s && s <= one && zero <= u && u <= one;
  }
  if (wx * ry - wy * rx != 0) return false;  // parallel, distinct lines
  // Collinear: parameters of q's endpoints along p.
  const std::int64_t rr = rx * rx + ry * ry;
  const Rational t0(wx * rx + wy * ry, rr);
  const Rational t1((q.b.x - p.a.x) * rx + (q.b.y - p.a.y) * ry, rr);
  const Rational lo = t0 < t1 ? t0 : t1;
  const Rational hi = t0 < t1 ? t1 : t0;
  return lo <= one && zero <= hi;
}

inline bool polylines_meet(const Polyline& a, const Polyline& b) {
  for (std::size_t i = 0; i < a.segment_count(); ++i)
    for (std::size_t j = 0; j < b.segment_count(); ++j)
      if (segments_meet(a.segment(i), b.segment(j))) return true;
  return false;
}

inline bool edge_in(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u))
    if (w == v) return true;
  return false;
}

/// Maximum independent set size by enumerating all subsets (n <= 22).
inline std::size_t independence_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if ((mask >> u & 1U) && (mask >> v & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Chromatic number by trying k = 1, 2, ... with plain backtracking (n <= 14).
inline std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<int> colour(n, -1);
  for (std::size_t k = 1;; ++k) {
    auto place = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
          if (colour[w] == static_cast<int>(c)) clash = true;
        }
        if (clash) continue;
        colour[v] = static_cast<int>(c);
        if (self(self, v + 1)) return true;
        colour[v] = -1;
      }
      return false;
    };
    std::fill(colour.begin(), colour.end(), -1);
    if (place(place, 0)) return k;
  }
}

/// Largest k with disjoint A, B, |A| = |B| = k, complete between them, by
/// enumerating every pair of disjoint vertex subsets (3^n pairs; n <= 10).
inline std::size_t balanced_biclique_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<int> label(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    std::vector<Vertex> a, b;
    for (std::size_t i = 0; i < n; ++i, x /= 3) {
      if (x % 3 == 1) a.push_back(static_cast<Vertex>(i));
      if (x % 3 == 2) b.push_back(static_cast<Vertex>(i));
    }
    if (a.size() != b.size() || a.size() <= best) continue;
    bool complete = true;
    for (Vertex u : a)
      for (Vertex v : b)
        if (!edge_in(g, u, v)) complete = false;
    if (complete) best = a.size();
  }
  return best;
}

/// Component sizes of g - removed, via union-find.
inline std::vector<std::size_t> component_sizes(const Graph& g, std::uint32_t removed_mask) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    if ((removed_mask >> u & 1U) || (removed_mask >> v & 1U)) continue;
    parent[find(u)] = find(v);
  }
  std::vector<std::size_t> count(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed_mask >> v & 1U)) ++count[find(v)];
  std::vector<std::size_t> out;
  for (auto c : count)
    if (c > 0) out.push_back(c);
  return out;
}

/// Minimum separator size by subset enumeration (n <= 20).
inline std::size_t min_separator_size(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    const auto sizes = component_sizes(g, mask);
    if (std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return 3 * s <= 2 * n; })) {
      best = k;
    }
  }
  return best;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace strgraph::oracle

#endif  // STRGRAPH_TESTS_ORACLES_HPP
