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
/// Simple undirected graphs and the basic operations the recursive
/// algorithms are built from.

#ifndef STRGRAPH_GRAPH_HPP
#define STRGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strgraph {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Duplicate edges passed to the constructor are merged;
/// self-loops and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") outside vertex range [0," + std::to_string(n) + ")");
      }
      if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      edge_count_ += list.size();
    }
    edge_count_ /= 2;
  }

  Graph(std::size_t n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Result of restricting a graph to a vertex subset.
struct InducedSubgraph {
  Graph graph;
  /// original_of[i] is the vertex of the parent graph that became vertex i.
  VertexSet original_of;

  VertexSet to_original(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(original_of[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.order());
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

/// Normalises an arbitrary vertex list into a VertexSet and range-checks it.
inline VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && vertices.back() >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(vertices.back()) +
                            " outside [0," + std::to_string(g.order()) + ")");
  }
  return vertices;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet keep = make_vertex_set(g, {vertices.begin(), vertices.end()});
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.order(), kAbsent);
  for (Vertex i = 0; i < keep.size(); ++i) local[keep[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (local[w] != kAbsent && i < local[w]) edges.emplace_back(i, local[w]);
    }
  }
  return {Graph(keep.size(), edges), std::move(keep)};
}

/// Vertices of g minus the sorted set `removed`.
inline VertexSet complement_of(const Graph& g, std::span<const Vertex> removed) {
  VertexSet out;
  out.reserve(g.order());
  std::size_t j = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    while (j < removed.size() && removed[j] < v) ++j;
    if (j < removed.size() && removed[j] == v) continue;
    out.push_back(v);
  }
  return out;
}

/// Connected components of g with the vertices in `removed` deleted.
/// Each component is sorted; components are ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g,
                                                   std::span<const Vertex> removed = {}) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    VertexSet component;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || !g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

/// Every vertex of `a` adjacent to every vertex of `b`, and a, b disjoint.
inline bool is_complete_bipartite(const Graph& g, std::span<const Vertex> a,
                                  std::span<const Vertex> b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (u == v || !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

/// Standard named graphs, used throughout the tests and examples.
namespace named {

inline Graph empty(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  if (n >= 3) edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

/// Parts {0..r-1} and {r..r+c-1}.
inline Graph complete_bipartite(std::size_t r, std::size_t c) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < r; ++u)
    for (Vertex v = 0; v < c; ++v) edges.emplace_back(u, static_cast<Vertex>(r + v));
  return Graph(r + c, edges);
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// rows x cols grid; vertex (i, j) is i * cols + j.
inline Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < rows; ++i) {
    for (Vertex j = 0; j < cols; ++j) {
      const Vertex v = static_cast<Vertex>(i * cols + j);
      if (j + 1 < cols) edges.emplace_back(v, v + 1);
      if (i + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  return Graph(rows * cols, edges);
}

/// Vertex-disjoint union; vertices of h are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), edges);
}

}  // namespace named

}  // namespace strgraph

#endif  // STRGRAPH_GRAPH_HPP
