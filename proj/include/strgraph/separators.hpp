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
/// Balanced (2/3) vertex separators: the checker, an exact search for small
/// graphs, two heuristics, and the d * sqrt(m) * log2(m) size bound.
///
/// A set S separates G on n vertices when every connected component of G - S
/// has at most 2n/3 vertices. Sizes are compared as 3 * size <= 2 * n, so the
/// balance test never rounds.

#ifndef STRGRAPH_SEPARATORS_HPP
#define STRGRAPH_SEPARATORS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strgraph/graph.hpp"

namespace strgraph {

/// The absolute constants the recursive algorithms and bounds are stated with.
struct ParamSet {
  double d = 1.0;  ///< separator constant: |S| <= d sqrt(m) log2 m
  double b = 1.0;  ///< biclique constant: parts >= eps^b n / log2 n
  double C = 8.0;  ///< colouring exponent constant
  std::size_t base_case_n = 18;  ///< graphs this small are solved exactly

  /// Throws std::invalid_argument when a constant is out of range.
  void validate() const {
    if (!(d >= 1.0)) throw std::invalid_argument("parameter d must be >= 1");
    if (!(b >= 1.0)) throw std::invalid_argument("parameter b must be >= 1");
    if (!(C > 0.0)) throw std::invalid_argument("parameter C must be positive");
    if (base_case_n < 4 || base_case_n > 64) {
      throw std::invalid_argument("base_case_n must lie in [4, 64]");
    }
  }

  /// The independent-set recursion is analysed with C >= max(8d, 6b + 1).
  bool satisfies_independence_constant() const { return C >= std::max(8 * d, 6 * b + 1); }
};

/// S together with a certified partition V = S + V1 + V2.
struct SeparatorResult {
  VertexSet s;
  VertexSet v1;
  VertexSet v2;

  friend bool operator==(const SeparatorResult&, const SeparatorResult&) = default;
};

namespace detail {

inline bool balanced_part(std::size_t part, std::size_t n) { return 3 * part <= 2 * n; }

inline VertexSet merge_sorted(const std::vector<const VertexSet*>& parts) {
  VertexSet out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

// Packs components into two sides of at most 2n/3 vertices each.
inline std::optional<std::pair<VertexSet, VertexSet>> pack_components(
    std::vector<VertexSet> components, std::size_t n) {
  std::stable_sort(components.begin(), components.end(),
                   [](const VertexSet& l, const VertexSet& r) { return l.size() > r.size(); });
  std::vector<const VertexSet*> side1, side2;
  std::size_t size1 = 0, size2 = 0;
  for (const auto& c : components) {
    if (size2 < size1) {
      side2.push_back(&c);
      size2 += c.size();
    } else {
      side1.push_back(&c);
      size1 += c.size();
    }
  }
  if (balanced_part(size1, n) && balanced_part(size2, n)) {
    return std::pair{merge_sorted(side1), merge_sorted(side2)};
  }
  // Largest-first packing cannot fail when every component is balanced, but
  // a full subset search backs it up for the small cases where it is cheap.
  if (components.size() > 20) return std::nullopt;
  const std::uint32_t limit = std::uint32_t{1} << components.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<const VertexSet*> in1, in2;
    std::size_t s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (mask >> i & 1U) {
        in1.push_back(&components[i]);
        s1 += components[i].size();
      } else {
        in2.push_back(&components[i]);
        s2 += components[i].size();
      }
    }
    if (balanced_part(s1, n) && balanced_part(s2, n)) {
      return std::pair{merge_sorted(in1), merge_sorted(in2)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the separator condition and, when it holds, returns the witnessing
/// partition. Components of G - S are packed largest-first into the lighter side.
inline std::optional<SeparatorResult> is_valid_separator(const Graph& g,
                                                         std::span<const Vertex> s) {
  VertexSet removed = make_vertex_set(g, {s.begin(), s.end()});
  const std::size_t n = g.order();
  auto components = connected_components(g, removed);
  for (const auto& c : components) {
    if (!detail::balanced_part(c.size(), n)) return std::nullopt;
  }
  auto packed = detail::pack_components(std::move(components), n);
  if (!packed) return std::nullopt;
  return SeparatorResult{std::move(removed), std::move(packed->first),
                         std::move(packed->second)};
}

/// Full structural check of a SeparatorResult against g.
inline bool certifies_separator(const Graph& g, const SeparatorResult& r) {
  const std::size_t n = g.order();
  if (r.s.size() + r.v1.size() + r.v2.size() != n) return false;
  std::vector<int> side(n, -1);
  auto mark = [&](const VertexSet& part, int label) {
    for (Vertex v : part) {
      if (v >= n || side[v] != -1) return false;
      side[v] = label;
    }
    return true;
  };
  if (!mark(r.s, 0) || !mark(r.v1, 1) || !mark(r.v2, 2)) return false;
  if (!detail::balanced_part(r.v1.size(), n) || !detail::balanced_part(r.v2.size(), n)) {
    return false;
  }
  for (auto [u, v] : g.edges()) {
    if (side[u] + side[v] == 3 && side[u] != 0 && side[v] != 0) return false;
  }
  return true;
}

inline constexpr std::size_t kMaxExactSeparatorOrder = 20;

/// Minimum separator by enumerating candidate sets in increasing size, each
/// size in lexicographic order. Exponential; limited to 20 vertices.
inline SeparatorResult exact_min_separator(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxExactSeparatorOrder) {
    throw std::invalid_argument("exact_min_separator is limited to 20 vertices, got " +
                                std::to_string(n));
  }
  using Mask = std::uint32_t;
  std::vector<Mask> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

  auto separates = [&](Mask removed) {
    Mask left = full & ~removed;
    while (left != 0) {
      Mask component = left & (~left + 1);
      Mask frontier = component;
      while (frontier != 0) {
        Mask grown = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grown |= nbr[std::countr_zero(f)];
        grown &= left & ~component;
        component |= grown;
        frontier = grown;
      }
      if (!detail::balanced_part(static_cast<std::size_t>(std::popcount(component)), n)) {
        return false;
      }
      left &= ~component;
    }
    return true;
  };

  std::vector<Vertex> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    while (true) {
      Mask removed = 0;
      for (Vertex v : pick) removed |= Mask{1} << v;
      if (separates(removed)) {
        auto result = is_valid_separator(g, pick);
        if (!result) throw std::logic_error("mask and list separator checks disagree");
        return *result;
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("removing every vertex always separates");
}

/// Drops members of a valid separator, in increasing order, while it stays valid.
inline SeparatorResult shrink_separator(const Graph& g, SeparatorResult result) {
  VertexSet s = result.s;
  for (std::size_t i = 0; i < s.size();) {
    VertexSet trial = s;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (auto smaller = is_valid_separator(g, trial)) {
      s = std::move(trial);
      result = std::move(*smaller);
    } else {
      ++i;
    }
  }
  return result;
}

/// The ceil(n/3) highest-degree vertices, then shrunk. Removing ceil(n/3)
/// vertices leaves at most 2n/3, so this is valid for every graph.
inline SeparatorResult trivial_separator(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet order = all_vertices(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex l, Vertex r) { return g.degree(l) > g.degree(r); });
  order.resize((n + 2) / 3);
  std::sort(order.begin(), order.end());
  auto result = is_valid_separator(g, order);
  if (!result) throw std::logic_error("trivial separator rejected");
  return shrink_separator(g, std::move(*result));
}

/// Separator from a breadth-first level structure rooted at a maximum-degree
/// vertex: the smallest single level that separates, unless the trivial
/// separator is smaller.
inline SeparatorResult bfs_separator(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("bfs_separator needs a non-empty graph");
  if (auto none = is_valid_separator(g, VertexSet{})) return *none;

  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  std::vector<VertexSet> levels;
  std::vector<int> depth(n, -1);
  depth[root] = 0;
  VertexSet current{root};
  while (!current.empty()) {
    levels.push_back(current);
    VertexSet next;
    for (Vertex v : current) {
      for (Vertex w : g.neighbors(v)) {
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }

  std::optional<SeparatorResult> best;
  for (const auto& level : levels) {
    if (best && level.size() >= best->s.size()) continue;
    if (auto r = is_valid_separator(g, level)) best = std::move(r);
  }
  auto fallback = trivial_separator(g);
  if (best && best->s.size() <= fallback.s.size()) return *best;
  return fallback;
}

/// Eigenvector of the second-smallest Laplacian eigenvalue, with the sign
/// fixed so that the first non-negligible entry is positive.
inline std::vector<double> fiedler_vector(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.order(); ++v) {
    laplacian(v, v) = static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) laplacian(v, w) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success || n < 2) return std::vector<double>(g.order(), 0.0);
  Eigen::VectorXd f = solver.eigenvectors().col(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(f(i)) > 1e-12) {
      if (f(i) < 0) f = -f;
      break;
    }
  }
  return {f.data(), f.data() + n};
}

/// Spectral bisection turned into a vertex separator.
///
/// Works on the largest component of g. Its vertices are ordered by Fiedler
/// value; among prefix cuts with both sides between a third and two thirds of
/// the component, the one with fewest cut edges wins. Cut-edge endpoints on
/// the smaller side form S, which is then shrunk. An invalid S falls back to
/// bfs_separator.
inline SeparatorResult spectral_separator(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("spectral_separator needs at least 3 vertices");
  if (auto none = is_valid_separator(g, VertexSet{})) return *none;

  auto components = connected_components(g);
  const auto largest = std::max_element(
      components.begin(), components.end(),
      [](const VertexSet& l, const VertexSet& r) { return l.size() < r.size(); });
  const auto piece = induced_subgraph(g, *largest);
  const Graph& h = piece.graph;
  const std::size_t size = h.order();

  const auto values = fiedler_vector(h);
  VertexSet order = all_vertices(h);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex l, Vertex r) { return values[l] < values[r]; });

  const std::size_t lo = std::max<std::size_t>(1, (size + 2) / 3);
  const std::size_t hi = std::min(size - 1, 2 * size / 3);
  std::vector<char> in_prefix(size, 0);
  long long cut = 0;
  long long best_cut = -1;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= hi; ++k) {
    const Vertex v = order[k - 1];
    long long inside = 0;
    for (Vertex w : h.neighbors(v)) inside += in_prefix[w];
    cut += static_cast<long long>(h.degree(v)) - 2 * inside;
    in_prefix[v] = 1;
    if (k >= lo && (best_cut < 0 || cut < best_cut)) {
      best_cut = cut;
      best_k = k;
    }
  }

  if (best_k > 0) {
    std::vector<char> prefix(size, 0);
    for (std::size_t i = 0; i < best_k; ++i) prefix[order[i]] = 1;
    const char smaller = best_k <= size - best_k ? 1 : 0;
    VertexSet local;
    for (auto [u, v] : h.edges()) {
      if (prefix[u] == prefix[v]) continue;
      local.push_back(prefix[u] == smaller ? u : v);
    }
    const VertexSet s = piece.to_original(make_vertex_set(h, std::move(local)));
    if (auto r = is_valid_separator(g, s)) return shrink_separator(g, std::move(*r));
  }
  return bfs_separator(g);
}

/// d * sqrt(m) * log2(m); defined for m >= 2.
inline double separator_size_bound(std::size_t m, const ParamSet& params) {
  if (m < 2) throw std::invalid_argument("separator bound needs m >= 2");
  const auto mm = static_cast<double>(m);
  return params.d * std::sqrt(mm) * std::log2(mm);
}

}  // namespace strgraph

#endif  // STRGRAPH_SEPARATORS_HPP
