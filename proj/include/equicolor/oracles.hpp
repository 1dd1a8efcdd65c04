// Copyright 2026 The equicolor Authors
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

#pragma once

#include <optional>
#include <vector>

#include "equicolor/clique_partition.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/gadgets.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/ring.hpp"

// Exhaustive reference implementations. Each one works from the definition
// and uses nothing from the fast algorithms it is meant to check. The size
// caps are guards against accidental exponential runs; pass a larger cap to
// lift them.

namespace equicolor {

inline constexpr int kBruteColoringCap = 12;
inline constexpr int kBruteCountCap = 12;
inline constexpr int kBruteTreewidthCap = 10;

/// Some proper coloring with k colors whose class sizes differ by at most
/// one, or nullopt. Vertices are colored in a search order that keeps the
/// set of colored vertices with uncolored neighbors small; failed states are
/// remembered up to a permutation of colors, which keeps disjoint unions of
/// many small pieces tractable.
std::optional<Coloring> brute_equitable(const Graph& g, int k, int max_vertices = kBruteColoringCap);

/// Number of partitions of V(g) into q.k cliques of size q.r and cliques of
/// size q.r - 1 elsewhere. Zero for shapes that do not fit n.
Count brute_count_partitions(const Graph& g, const CliquePartitionQuery& q, int max_vertices = kBruteCountCap);

/// Item-to-bin assignment filling every bin to exactly the capacity, or
/// nullopt. Instances whose total differs from bins * capacity have none.
std::optional<std::vector<int>> solve_binpacking(const BinPackingInstance& inst);

/// Exact treewidth by dynamic programming over vertex subsets. -1 for the
/// empty graph.
int brute_treewidth(const Graph& g, int max_vertices = kBruteTreewidthCap);

/// Largest clique, by enumeration.
int brute_clique_number(const Graph& g);

/// True when some vertex has three pairwise non-adjacent neighbors.
bool brute_has_claw(const Graph& g);

/// Chordality by repeated removal of simplicial vertices.
bool brute_is_chordal(const Graph& g);

/// Smallest k with an equitable k-coloring. With `allow_fast_path`, claw-free
/// chordal graphs answer with their clique number (de Werra); everything else
/// is searched.
int equitable_chromatic_number(const Graph& g, bool allow_fast_path = true, int max_vertices = kBruteColoringCap);

}  // namespace equicolor
