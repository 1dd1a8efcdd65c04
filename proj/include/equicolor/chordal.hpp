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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "equicolor/error.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Outcome of a chordality test. Exactly one of `peo` / `hole` is meaningful:
/// a perfect elimination ordering (each vertex simplicial among the vertices
/// after it) when the graph is chordal, otherwise an induced cycle on at
/// least four vertices, listed in cyclic order.
struct ChordalityResult {
  std::vector<Vertex> peo;
  std::vector<Vertex> hole;

  bool chordal() const noexcept { return hole.empty(); }
};

/// Maximum cardinality search. The reverse of the visit order is a perfect
/// elimination ordering iff the graph is chordal; on failure a chordless
/// cycle is extracted as certificate. Ties go to the lowest index.
ChordalityResult mcs_peo(const Graph& g);

class NotChordalError : public Error {
 public:
  explicit NotChordalError(std::vector<Vertex> hole);
  const std::vector<Vertex>& hole() const noexcept { return hole_; }

 private:
  std::vector<Vertex> hole_;
};

/// Tree over the maximal cliques of a chordal graph with the running
/// intersection property.
struct CliqueTree {
  std::vector<std::vector<Vertex>> cliques;  // each sorted
  std::vector<std::vector<int>> tree;        // adjacency over clique indices
  std::vector<Vertex> peo;
};

/// Throws NotChordalError on non-chordal input.
CliqueTree clique_tree(const Graph& g);

/// Clique number of a chordal graph (0 for the empty graph).
/// Throws NotChordalError on non-chordal input.
int max_clique_size(const Graph& g);

/// Same, reusing an already computed perfect elimination ordering.
int max_clique_size(const Graph& g, std::span<const Vertex> peo);

/// Largest r <= r_cap such that g has an induced K_{1,r}; 0 when edgeless.
/// Exhaustive over centers and independent sets of their neighborhoods.
int max_induced_star(const Graph& g, int r_cap);

/// An induced K_{1,3}: center followed by three pairwise non-adjacent
/// neighbors.
using Claw = std::array<Vertex, 4>;

/// Finds a claw in a chordal graph given one of its perfect elimination
/// orderings. Greedy independent sets along the ordering are maximum on
/// chordal neighborhoods, so this is exact and runs in O(sum deg^2).
std::optional<Claw> find_claw(const Graph& g, std::span<const Vertex> peo);

}  // namespace equicolor
