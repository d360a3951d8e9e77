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
/// Crossing statistics of topological drawings, read off their crossing graphs.

#ifndef STRGRAPH_DRAWINGS_HPP
#define STRGRAPH_DRAWINGS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "strgraph/biclique.hpp"
#include "strgraph/cliques.hpp"
#include "strgraph/curves.hpp"

namespace strgraph {

struct CrossingCount {
  std::size_t pairs = 0;
  /// pairs * n^2 / m^3, reported only when m >= 4n.
  std::optional<double> ratio;
};

inline CrossingCount crossing_count(const Drawing& drawing) {
  CrossingCount out;
  out.pairs = build_edge_crossing_graph(drawing).size();
  const auto n = static_cast<double>(drawing.vertex_count());
  const auto m = static_cast<double>(drawing.edge_count());
  if (drawing.edge_count() > 0 && drawing.edge_count() >= 4 * drawing.vertex_count()) {
    out.ratio = static_cast<double>(out.pairs) * n * n / (m * m * m);
  }
  return out;
}

/// Two disjoint sets of drawing edges (indices into drawing.edges()) such
/// that every edge of one crosses every edge of the other.
struct CrossingPairSets {
  std::vector<std::size_t> e1;
  std::vector<std::size_t> e2;
};

inline bool all_pairs_cross(const Drawing& drawing, const CrossingPairSets& sets) {
  for (std::size_t i : sets.e1) {
    for (std::size_t j : sets.e2) {
      if (i == j || i >= drawing.edge_count() || j >= drawing.edge_count()) return false;
      if (!drawing.edges_cross(i, j)) return false;
    }
  }
  return true;
}

/// Balanced biclique of the crossing graph, mapped back to drawing edges.
/// Exact when the crossing graph has at most 16 vertices, greedy otherwise.
inline CrossingPairSets crossing_pair_sets(const Drawing& drawing) {
  const Graph crossings = build_edge_crossing_graph(drawing);
  const BicliqueResult biclique = crossings.order() <= kMaxExactBicliqueOrder
                                      ? max_biclique_exact(crossings)
                                      : greedy_biclique(crossings);
  CrossingPairSets out{{biclique.a.begin(), biclique.a.end()},
                       {biclique.b.begin(), biclique.b.end()}};
  if (!all_pairs_cross(drawing, out)) {
    throw std::logic_error("crossing pair sets failed the geometric recheck");
  }
  return out;
}

/// True iff no t edges of the drawing pairwise cross.
inline bool quasi_planarity(const Drawing& drawing, std::size_t t) {
  if (t < 2) throw std::invalid_argument("quasi_planarity needs t >= 2");
  return is_kt_free(build_edge_crossing_graph(drawing), t);
}

}  // namespace strgraph

#endif  // STRGRAPH_DRAWINGS_HPP
