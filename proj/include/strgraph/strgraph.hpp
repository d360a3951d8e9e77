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
/// Umbrella header.

#ifndef STRGRAPH_STRGRAPH_HPP
#define STRGRAPH_STRGRAPH_HPP

#include "strgraph/biclique.hpp"
#include "strgraph/bounds.hpp"
#include "strgraph/cliques.hpp"
#include "strgraph/curves.hpp"
#include "strgraph/decomposition.hpp"
#include "strgraph/drawings.hpp"
#include "strgraph/experiment.hpp"
#include "strgraph/generators.hpp"
#include "strgraph/geometry.hpp"
#include "strgraph/graph.hpp"
#include "strgraph/io.hpp"
#include "strgraph/random.hpp"
#include "strgraph/separators.hpp"

#endif  // STRGRAPH_STRGRAPH_HPP
