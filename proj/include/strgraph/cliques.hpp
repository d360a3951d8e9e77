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
/// Exact clique and independent-set search for desk-scale graphs.

#ifndef STRGRAPH_CLIQUES_HPP
#define STRGRAPH_CLIQUES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strgraph/graph.hpp"

namespace strgraph {

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t target, std::vector<char> alive)
      : g_(g), target_(target), alive_(std::move(alive)) {}

  std::optional<VertexSet> run() {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (alive_[v]) candidates.push_back(v);
    }
    if (extend(candidates)) return chosen_;
    return std::nullopt;
  }

 private:
  // Greedy colouring of the candidates: a clique uses each colour at most once.
  std::size_t colour_bound(const std::vector<Vertex>& candidates) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      auto fits = [&](const std::vector<Vertex>& cls) {
        return std::none_of(cls.begin(), cls.end(),
                            [&](Vertex w) { return g_.has_edge(v, w); });
      };
      auto it = std::find_if(classes.begin(), classes.end(), fits);
      if (it == classes.end()) {
        classes.push_back({v});
      } else {
        it->push_back(v);
      }
    }
    return classes.size();
  }

  bool extend(const std::vector<Vertex>& candidates) {
    if (chosen_.size() == target_) return true;
    if (chosen_.size() + candidates.size() < target_) return false;
    if (candidates.size() > 2 && chosen_.size() + colour_bound(candidates) < target_) {
      return false;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (chosen_.size() + (candidates.size() - i) < target_) return false;
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (g_.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      }
      chosen_.push_back(v);
      if (extend(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t target_;
  std::vector<char> alive_;
  VertexSet chosen_;
};

}  // namespace detail

/// Lexicographically first clique on exactly `size` vertices, if any.
///
/// Exact; exponential in the worst case. Vertices outside the (size-1)-core
/// are discarded first, which keeps sparse inputs cheap.
inline std::optional<VertexSet> find_clique(const Graph& g, std::size_t size) {
  if (size == 0) return VertexSet{};
  if (g.order() < size) return std::nullopt;
  std::vector<char> alive(g.order(), 1);
  std::vector<std::size_t> degree(g.order());
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] + 1 < size) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --degree[w] + 1 < size) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return detail::CliqueSearch(g, size, std::move(alive)).run();
}

/// True iff g has no clique on t vertices. Exact; intended for clique number
/// up to about 20 or n up to about 60, and slow beyond that.
inline bool is_kt_free(const Graph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("is_kt_free needs t >= 1");
  return !find_clique(g, t).has_value();
}

/// Largest clique, by increasing the target until the search fails.
inline VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    auto found = find_clique(g, k);
    if (!found) break;
    best = std::move(*found);
  }
  return best;
}

inline constexpr std::size_t kMaxExactIndependentSetOrder = 64;

/// Maximum independent set by branch and bound over 64-bit vertex masks.
///
/// Vertices of degree at most one (in the remaining graph) are taken without
/// branching; otherwise the search branches on a maximum-degree vertex.
inline VertexSet maximum_independent_set(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxExactIndependentSetOrder) {
    throw std::invalid_argument("exact independent set limited to 64 vertices");
  }
  using Mask = std::uint64_t;
  std::vector<Mask> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;

  Mask best = 0;
  int best_size = 0;

  auto search = [&](auto&& self, Mask remaining, Mask taken, int taken_size) -> void {
    while (true) {
      if (taken_size + std::popcount(remaining) <= best_size) return;
      if (remaining == 0) {
        best = taken;
        best_size = taken_size;
        return;
      }
      Vertex pick = 0;
      int pick_degree = -1;
      bool reducible = false;
      for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(rest));
        const int deg = std::popcount(nbr[v] & remaining);
        if (deg <= 1) {
          pick = v;
          reducible = true;
          break;
        }
        if (deg > pick_degree) {
          pick = v;
          pick_degree = deg;
        }
      }
      const Mask bit = Mask{1} << pick;
      if (reducible) {
        taken |= bit;
        ++taken_size;
        remaining &= ~(bit | nbr[pick]);
        continue;
      }
      self(self, remaining & ~(bit | nbr[pick]), taken | bit, taken_size + 1);
      remaining &= ~bit;
    }
  };
  search(search, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, 0, 0);

  VertexSet out;
  for (Mask rest = best; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return out;
}

}  // namespace strgraph

#endif  // STRGRAPH_CLIQUES_HPP
