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
/// Separator/biclique recursion for independent sets, the colouring obtained
/// by extracting independent sets repeatedly, and the clique-or-independent-set
/// dichotomy built on top of it.

#ifndef STRGRAPH_DECOMPOSITION_HPP
#define STRGRAPH_DECOMPOSITION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strgraph/biclique.hpp"
#include "strgraph/bounds.hpp"
#include "strgraph/cliques.hpp"
#include "strgraph/graph.hpp"
#include "strgraph/separators.hpp"

namespace strgraph {

/// How often each branch of the independent-set recursion ran.
struct RecursionStats {
  std::size_t exact_leaves = 0;
  std::size_t edgeless_leaves = 0;
  std::size_t separator_splits = 0;
  std::size_t biclique_splits = 0;
  std::size_t degenerate_bicliques = 0;  ///< dense case with no biclique; split instead
  std::size_t recursion_size = 0;        ///< set size before the greedy extension
  std::size_t extended = 0;              ///< vertices added by the greedy extension
};

namespace detail {

inline VertexSet independent_set_rec(const Graph& g, std::size_t t, const ParamSet& params,
                                     RecursionStats& stats) {
  const std::size_t n = g.order();
  if (g.size() == 0) {
    ++stats.edgeless_leaves;
    return all_vertices(g);
  }
  if (n <= params.base_case_n) {
    ++stats.exact_leaves;
    return maximum_independent_set(g);
  }

  const double nn = static_cast<double>(n);
  const bool sparse =
      static_cast<double>(g.size()) <= separator_density_threshold(n, params) * nn * nn;

  if (!sparse) {
    auto biclique = greedy_biclique(g);
    if (biclique.side() > 0) {
      ++stats.biclique_splits;
      // One side is K_{ceil(t/2)}-free when g is K_t-free; try both.
      const std::size_t half = std::max<std::size_t>(2, (t + 1) / 2);
      VertexSet best;
      for (const auto* side : {&biclique.a, &biclique.b}) {
        const auto piece = induced_subgraph(g, *side);
        auto found = piece.to_original(independent_set_rec(piece.graph, half, params, stats));
        if (found.size() > best.size()) best = std::move(found);
      }
      return best;
    }
    ++stats.degenerate_bicliques;
  }

  ++stats.separator_splits;
  const auto sep = spectral_separator(g);
  const auto left = induced_subgraph(g, sep.v1);
  const auto right = induced_subgraph(g, sep.v2);
  VertexSet in_left = left.to_original(independent_set_rec(left.graph, t, params, stats));
  VertexSet in_right = right.to_original(independent_set_rec(right.graph, t, params, stats));
  for (Vertex u : in_left) {
    for (Vertex w : g.neighbors(u)) {
      if (std::binary_search(in_right.begin(), in_right.end(), w)) {
        throw std::logic_error("separator sides are adjacent");
      }
    }
  }
  VertexSet out;
  std::merge(in_left.begin(), in_left.end(), in_right.begin(), in_right.end(),
             std::back_inserter(out));
  return out;
}

/// Grows `set` to a maximal independent set, scanning vertices by
/// increasing degree and then index.
inline VertexSet extend_to_maximal(const Graph& g, const VertexSet& set) {
  std::vector<char> blocked(g.order(), 0), chosen(g.order(), 0);
  for (Vertex v : set) {
    chosen[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  std::vector<Vertex> order = all_vertices(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (Vertex v : order) {
    if (chosen[v] || blocked[v]) continue;
    chosen[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (chosen[v]) out.push_back(v);
  return out;
}

}  // namespace detail

/// Independent set from the separator/biclique recursion.
///
/// Small graphs are solved exactly. Sparse graphs (m <= eps n^2 with
/// eps = (4 d log^2 n)^-2) are split by a separator and the two halves'
/// answers are united. Dense graphs are narrowed to the better of the two
/// sides of a balanced biclique, recursing with ceil(t/2). The result is
/// then extended greedily to a maximal independent set, which only adds
/// vertices.
inline VertexSet find_independent_set(const Graph& g, std::size_t t, const ParamSet& params,
                                      RecursionStats* stats = nullptr) {
  if (t < 2) throw std::invalid_argument("find_independent_set needs t >= 2");
  params.validate();
  RecursionStats local;
  RecursionStats& st = stats ? *stats : local;
  const auto raw = detail::independent_set_rec(g, t, params, st);
  if (!is_independent_set(g, raw)) throw std::logic_error("recursion returned a dependent set");
  auto out = detail::extend_to_maximal(g, raw);
  st.recursion_size = raw.size();
  st.extended = out.size() - raw.size();
  if (!is_independent_set(g, out)) throw std::logic_error("recursion returned a dependent set");
  return out;
}

/// Proper colouring: colour[v] in 0..k-1 and every colour used.
struct Coloring {
  std::vector<std::size_t> color;
  std::size_t k = 0;
  /// 4 (log n)^(C log t + 1) for n > 2, reported alongside k.
  std::optional<double> bound;

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(k);
    for (Vertex v = 0; v < color.size(); ++v) out[color[v]].push_back(v);
    return out;
  }
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.color.size() != g.order()) return false;
  std::vector<char> used(c.k, 0);
  for (std::size_t col : c.color) {
    if (col >= c.k) return false;
    used[col] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
  for (auto [u, v] : g.edges()) {
    if (c.color[u] == c.color[v]) return false;
  }
  return true;
}

/// Colours g by repeatedly extracting find_independent_set from the
/// uncoloured vertices and giving each extracted set a fresh colour.
inline Coloring color_graph(const Graph& g, std::size_t t, const ParamSet& params) {
  if (t < 2) throw std::invalid_argument("color_graph needs t >= 2");
  Coloring out;
  out.color.assign(g.order(), 0);
  out.bound = coloring_bound(g.order(), t, params);
  VertexSet remaining = all_vertices(g);
  while (!remaining.empty()) {
    const auto piece = induced_subgraph(g, remaining);
    const VertexSet chosen = piece.to_original(find_independent_set(piece.graph, t, params));
    if (chosen.empty()) throw std::logic_error("empty independent set on non-empty graph");
    for (Vertex v : chosen) out.color[v] = out.k;
    ++out.k;
    VertexSet rest;
    std::set_difference(remaining.begin(), remaining.end(), chosen.begin(), chosen.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
  }
  return out;
}

/// Outcome of clique_or_independent with the targets it was measured against.
struct CliqueOrIndependent {
  enum class Branch { kClique, kIndependent };

  Branch branch = Branch::kIndependent;
  VertexSet set;
  std::size_t t = 0;                 ///< clique size searched for
  double exponent_c = 0.0;           ///< epsilon / C
  double clique_target = 0.0;        ///< n^(c / log log n)
  double independent_target = 0.0;  ///< n^(1 - epsilon)
  std::size_t colors = 0;            ///< colours used when the colouring ran

  bool target_met() const {
    const auto size = static_cast<double>(set.size());
    return branch == Branch::kClique ? size >= clique_target : size >= independent_target;
  }
};

/// Either a clique on t = ceil(n^(c / log log n)) vertices, c = epsilon / C,
/// or the largest colour class of color_graph(g, t).
inline CliqueOrIndependent clique_or_independent(const Graph& g, double epsilon,
                                                 const ParamSet& params) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("clique_or_independent needs n >= 3");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  params.validate();
  CliqueOrIndependent out;
  const double nn = static_cast<double>(n);
  out.exponent_c = epsilon / params.C;
  out.clique_target = std::pow(nn, out.exponent_c / std::log2(std::log2(nn)));
  out.independent_target = std::pow(nn, 1.0 - epsilon);
  out.t = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(out.clique_target)));

  if (auto clique = find_clique(g, out.t)) {
    if (!is_clique(g, *clique)) throw std::logic_error("clique search returned a non-clique");
    out.branch = CliqueOrIndependent::Branch::kClique;
    out.set = std::move(*clique);
    return out;
  }
  const auto coloring = color_graph(g, out.t, params);
  out.colors = coloring.k;
  for (auto& cls : coloring.classes()) {
    if (cls.size() > out.set.size()) out.set = std::move(cls);
  }
  if (!is_independent_set(g, out.set)) throw std::logic_error("colour class not independent");
  out.branch = CliqueOrIndependent::Branch::kIndependent;
  return out;
}

}  // namespace strgraph

#endif  // STRGRAPH_DECOMPOSITION_HPP
