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

#include "strgraph/decomposition.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "strgraph/curves.hpp"
#include "strgraph/generators.hpp"

namespace strgraph {
namespace {

Graph random_graph(std::size_t n, std::uint64_t permille, std::uint64_t seed) {
  SplitMix64 rng(Seed{seed});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(1000) < permille) edges.emplace_back(u, v);
  return Graph(n, edges);
}

const ParamSet kDefaults{};

TEST(FindIndependentSetTest, Examples) {
  EXPECT_EQ(find_independent_set(named::empty(10), 3, kDefaults).size(), 10u);
  const Graph k10 = build_string_graph(pairwise_crossing_star(10));
  EXPECT_EQ(find_independent_set(k10, 3, kDefaults).size(), 1u);
  EXPECT_EQ(find_independent_set(k10, 11, kDefaults).size(), 1u);
  const Graph p5 = build_string_graph(interval_path(5));
  const auto s = find_independent_set(p5, 3, kDefaults);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(oracle::independence_number(p5), 3u);
  EXPECT_THROW(find_independent_set(p5, 1, kDefaults), std::invalid_argument);
}

TEST(FindIndependentSetTest, ExercisesEveryBranch) {
  // The separator branch needs m <= n^2 / (4 log^2 n)^2: one edge among
  // 300 vertices qualifies.
  RecursionStats stats;
  const Graph sparse = named::disjoint_union(named::path(2), named::empty(298));
  const auto s = find_independent_set(sparse, 3, kDefaults, &stats);
  EXPECT_TRUE(is_independent_set(sparse, s));
  EXPECT_EQ(s.size(), 299u);
  EXPECT_GT(stats.separator_splits, 0u);

  RecursionStats dense;
  const Graph g = random_graph(60, 500, 3);
  EXPECT_TRUE(is_independent_set(g, find_independent_set(g, 4, kDefaults, &dense)));
  EXPECT_GT(dense.biclique_splits + dense.degenerate_bicliques, 0u);
}

TEST(FindIndependentSetTest, ResultIsMaximal) {
  const Graph g = build_string_graph(interval_path(100));
  RecursionStats stats;
  const auto s = find_independent_set(g, 3, kDefaults, &stats);
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(stats.recursion_size + stats.extended, s.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    VertexSet bigger = s;
    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
    EXPECT_FALSE(is_independent_set(g, bigger)) << v;
  }
}

TEST(FindIndependentSetTest, IndependentOnEveryGenerator) {
  std::vector<Graph> graphs = {
      build_string_graph(disjoint_segments(50)),
      build_string_graph(pairwise_crossing_star(40)),
      build_string_graph(interval_path(90)),
      build_string_graph(grid_biclique(7, 9)),
      build_string_graph(polygon_cycle(77)),
      build_string_graph(random_segments(150, 600, Seed{5})),
      build_edge_crossing_graph(convex_drawing(12)),
      build_edge_crossing_graph(random_drawing(20, 60, Seed{2})),
  };
  for (const auto& g : graphs) {
    for (std::size_t t = 2; t <= 8; ++t) {
      EXPECT_TRUE(is_independent_set(g, find_independent_set(g, t, kDefaults)));
    }
  }
}

TEST(FindIndependentSetTest, ExactOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(14, 300, seed);
    EXPECT_EQ(find_independent_set(g, 3, kDefaults).size(), oracle::independence_number(g));
  }
}

TEST(ColorGraphTest, Examples) {
  EXPECT_EQ(color_graph(build_string_graph(disjoint_segments(5)), 3, kDefaults).k, 1u);
  EXPECT_EQ(color_graph(build_string_graph(pairwise_crossing_star(6)), 3, kDefaults).k, 6u);
  const Graph c5 = build_string_graph(polygon_cycle(5));
  ASSERT_EQ(c5, named::cycle(5));
  const auto c = color_graph(c5, 3, kDefaults);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(oracle::chromatic_number(c5), 3u);
  EXPECT_TRUE(is_proper_coloring(c5, c));
}

TEST(ColorGraphTest, CompleteAndEmptyAreExact) {
  for (std::size_t n = 1; n <= 14; ++n) {
    EXPECT_EQ(color_graph(named::complete(n), n + 1, kDefaults).k, n);
    EXPECT_EQ(color_graph(named::empty(n), 2, kDefaults).k, 1u);
  }
}

TEST(ColorGraphTest, ProperAndClassesPartitionVertices) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = random_graph(12, 150 + 30 * seed, seed);
    const auto c = color_graph(g, 3, kDefaults);
    ASSERT_TRUE(is_proper_coloring(g, c));
    EXPECT_GE(c.k, oracle::chromatic_number(g));
    // Put the classes back in reverse order: every edge of g must join
    // two distinct classes, and the classes together cover V.
    std::vector<char> seen(g.order(), 0);
    const auto classes = c.classes();
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      EXPECT_TRUE(is_independent_set(g, *it));
      for (Vertex v : *it) {
        EXPECT_FALSE(seen[v]);
        seen[v] = 1;
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; }));
  }
}

TEST(ColorGraphTest, ColourCountGrowsSlowlyOnRandomSegments) {
  for (std::size_t n : {64, 128, 256}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Graph g = build_string_graph(random_segments(n, 8 * n, Seed{seed}));
      const auto c = color_graph(g, 3, kDefaults);
      EXPECT_TRUE(is_proper_coloring(g, c));
      EXPECT_LE(static_cast<double>(c.k), std::pow(static_cast<double>(n), 0.9))
          << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(CliqueOrIndependentTest, Examples) {
  const auto k20 = clique_or_independent(build_string_graph(pairwise_crossing_star(20)), 0.5,
                                         kDefaults);
  EXPECT_EQ(k20.branch, CliqueOrIndependent::Branch::kClique);
  EXPECT_GE(k20.set.size(), k20.t);

  const Graph d20 = build_string_graph(disjoint_segments(20));
  const auto r = clique_or_independent(d20, 0.5, kDefaults);
  EXPECT_EQ(r.branch, CliqueOrIndependent::Branch::kIndependent);
  EXPECT_EQ(r.set.size(), 20u);
  EXPECT_TRUE(r.target_met());

  const Graph g = build_string_graph(random_segments(50, 400, Seed{1}));
  const auto q = clique_or_independent(g, 0.5, kDefaults);
  if (q.branch == CliqueOrIndependent::Branch::kClique) {
    EXPECT_TRUE(is_clique(g, q.set));
    EXPECT_GE(q.set.size(), q.t);
  } else {
    EXPECT_TRUE(is_independent_set(g, q.set));
  }
  EXPECT_TRUE(q.target_met());
}

TEST(CliqueOrIndependentTest, RejectsBadArguments) {
  EXPECT_THROW(clique_or_independent(named::path(2), 0.5, kDefaults), std::invalid_argument);
  EXPECT_THROW(clique_or_independent(named::path(5), 0.0, kDefaults), std::invalid_argument);
  EXPECT_THROW(clique_or_independent(named::path(5), 1.0, kDefaults), std::invalid_argument);
}

}  // namespace
}  // namespace strgraph
