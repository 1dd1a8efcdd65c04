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

#include <string>
#include <string_view>
#include <vector>

#include "equicolor/error.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Bags over a tree. Bags are kept sorted.
struct TreeDecomposition {
  int num_vertices = 0;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::vector<int>> tree;

  /// Largest bag size minus one; -1 without bags.
  int width() const;
  /// Tree edges (i, j), i < j, ascending.
  std::vector<std::pair<int, int>> tree_edges() const;
};

/// Elimination-ordering decomposition using the min-fill heuristic (ties:
/// fewer remaining neighbors, then lower index). Exact on chordal graphs,
/// where a zero-fill vertex always exists.
TreeDecomposition decompose_minfill(const Graph& g);

/// Decomposition built from an explicit elimination ordering.
TreeDecomposition decompose_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Parses the PACE-2017 .td format: "c" comments, one "s td <bags> <max bag
/// size> <vertices>" line, one "b <id> <v>..." line per bag (1-based), then
/// one "<i> <j>" line per tree edge.
TreeDecomposition parse_td(std::string_view text);

/// Writes the PACE-2017 .td format for `td`.
std::string write_td(const TreeDecomposition& td);

enum class TdCondition {
  kOk,
  kVertexCount,
  kNotATree,
  kUncoveredVertex,
  kUncoveredEdge,
  kDisconnectedVertex,
};

struct TdReport {
  TdCondition condition = TdCondition::kOk;
  /// Human-readable description of the first violation, vertices 1-based as
  /// in the file formats.
  std::string message;

  bool valid() const noexcept { return condition == TdCondition::kOk; }
};

/// Checks that `td` is a tree decomposition of `g`: tree shape, vertex
/// coverage, edge coverage, and connectivity of each vertex's bags. Reports
/// the first violation found in that order.
TdReport validate_td(const Graph& g, const TreeDecomposition& td);

enum class NiceKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Rooted decomposition whose root and leaves have empty bags. Children
/// always have a smaller index than their parent, so index order is a valid
/// bottom-up evaluation order.
struct NiceTreeDecomposition {
  int num_vertices = 0;
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  /// Underlying plain decomposition (for validate_td).
  TreeDecomposition as_tree_decomposition() const;
};

/// Converts a decomposition to nice form of the same width: forgets before
/// introduces along each tree edge and chains of join nodes with duplicated
/// bags at branching points. Throws InvalidDecomposition if `td` is not a
/// tree or a vertex's bags are disconnected.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

/// Checks node kinds, bag deltas, empty root and leaves, and that every
/// vertex is forgotten exactly once. Returns an empty string when valid.
std::string validate_nice(const NiceTreeDecomposition& ntd);

}  // namespace equicolor
