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

// Builds the string graph of a few random segments, colours it and prints a
// separator. Run with no arguments.

#include <iostream>

#include "strgraph/strgraph.hpp"

int main() {
  using namespace strgraph;
  const CurveFamily family = random_segments(60, 480, Seed{7});
  const Graph g = build_string_graph(family);
  std::cout << "segments: " << g.order() << ", intersecting pairs: " << g.size() << '\n';

  const ParamSet params;
  const Coloring coloring = color_graph(g, 3, params);
  std::cout << "colours used: " << coloring.k << " (proper: " << std::boolalpha
            << is_proper_coloring(g, coloring) << ")\n";

  const SeparatorResult sep = spectral_separator(g);
  std::cout << "separator of size " << sep.s.size() << " splits the rest into "
            << sep.v1.size() << " + " << sep.v2.size() << '\n';

  const auto clique_free = is_kt_free(g, 3);
  std::cout << "triangle-free: " << clique_free << '\n';
  return 0;
}
