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
/// Balanced complete bipartite subgraphs: a greedy extractor and an exact
/// search for graphs of at most 16 vertices.

#ifndef STRGRAPH_BICLIQUE_HPP
#define STRGRAPH_BICLIQUE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "strgraph/graph.hpp"

namespace strgraph {

/// Disjoint sides of equal size with every cross pair adjacent.
struct BicliqueResult {
  VertexSet a;
  VertexSet b;

  std::size_t side() const { return a.size(); }
  friend bool operator==(const BicliqueResult&, const BicliqueResult&) = default;
};

inline bool certifies_biclique(const Graph& g, const BicliqueResult& r) {
  if (r.a.size() != r.b.size()) return false;
  for (Vertex v : r.a)
    if (v >= g.order()) return false;
  for (Vertex v : r.b)
    if (v >= g.order()) return false;
  return is_complete_bipartite(g, r.a, r.b);
}

/// Greedy balanced biclique.
///
/// Starts from the edge with the largest degree sum and alternately adds to
/// each side the admissible vertex that keeps the most candidates for the
/// other side. Stops when the side whose turn it is cannot grow, then trims
/// the longer side to the most recently balanced size.
inline BicliqueResult greedy_biclique(const Graph& g) {
  if (g.size() == 0) return {};
  Edge seed{0, 0};
  std::size_t seed_weight = 0;
  for (auto [u, v] : g.edges()) {
    const std::size_t w = g.degree(u) + g.degree(v);
    if (w > seed_weight) {
      seed_weight = w;
      seed = {u, v};
    }
  }

  std::vector<Vertex> sides[2] = {{seed.first}, {seed.second}};
  // candidates[i]: vertices outside both sides adjacent to every vertex of side 1-i.
  VertexSet candidates[2];
  for (int i = 0; i < 2; ++i) {
    const Vertex anchor = i == 0 ? seed.second : seed.first;
    for (Vertex w : g.neighbors(anchor)) {
      if (w != seed.first && w != seed.second) candidates[i].push_back(w);
    }
  }

  for (int turn = 0;; turn ^= 1) {
    auto& grow = candidates[turn];
    auto& other = candidates[turn ^ 1];
    if (grow.empty()) break;
    Vertex pick = grow.front();
    std::size_t pick_score = 0;
    bool first = true;
    for (Vertex w : grow) {
      std::size_t score = 0;
      for (Vertex x : other) score += (x != w && g.has_edge(w, x)) ? 1 : 0;
      if (first || score > pick_score) {
        pick = w;
        pick_score = score;
        first = false;
      }
    }
    sides[turn].push_back(pick);
    grow.erase(std::find(grow.begin(), grow.end(), pick));
    VertexSet kept;
    for (Vertex x : other) {
      if (x != pick && g.has_edge(pick, x)) kept.push_back(x);
    }
    other = std::move(kept);
  }

  const std::size_t k = std::min(sides[0].size(), sides[1].size());
  BicliqueResult out{{sides[0].begin(), sides[0].begin() + static_cast<std::ptrdiff_t>(k)},
                     {sides[1].begin(), sides[1].begin() + static_cast<std::ptrdiff_t>(k)}};
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

inline constexpr std::size_t kMaxExactBicliqueOrder = 16;

/// Maximum balanced biclique by exhaustive search over one side.
///
/// For a side A the best partner is its common neighbourhood N(A), giving a
/// balanced biclique of min(|A|, |N(A)|). The lexicographically smallest
/// optimal A is returned, paired with the smallest vertices of N(A).
inline BicliqueResult max_biclique_exact(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxExactBicliqueOrder) {
    throw std::invalid_argument("max_biclique_exact is limited to 16 vertices, got " +
                                std::to_string(n));
  }
  using Mask = std::uint32_t;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;

  // common[mask] for all masks, built from the mask without its lowest bit.
  std::vector<Mask> common(std::size_t{1} << n);
  common[0] = full;
  int best = 0;
  for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
    const int low = std::countr_zero(mask);
    common[mask] = common[mask & (mask - 1)] & nbr[low];
    best = std::max(best, std::min(std::popcount(mask), std::popcount(common[mask])));
    if (mask == full) break;
  }
  if (best == 0) return {};

  const auto k = static_cast<std::size_t>(best);
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    Mask mask = 0;
    for (Vertex v : pick) mask |= Mask{1} << v;
    if (static_cast<std::size_t>(std::popcount(common[mask])) >= k) {
      BicliqueResult out{pick, {}};
      for (Mask rest = common[mask]; out.b.size() < k; rest &= rest - 1) {
        out.b.push_back(static_cast<Vertex>(std::countr_zero(rest)));
      }
      return out;
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw std::logic_error("optimal biclique side vanished during enumeration");
}

}  // namespace strgraph

#endif  // STRGRAPH_BICLIQUE_HPP
