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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace equicolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency is stored twice: as sorted neighbor lists for traversal and as
/// bitset rows for constant-time adjacency and subset tests. Instances are
/// immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are merged. Throws `Error` on self-loops or endpoints
  /// outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  /// Open neighborhood of `v` as a bitset over V.
  const VertexSet& row(Vertex v) const { return rows_[v]; }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Provenance label of `v`; empty when the graph carries no labels.
  const std::string& label(Vertex v) const;
  /// Copy of this graph carrying `labels` (one per vertex).
  Graph with_labels(std::vector<std::string> labels) const;

  /// True if every pair of distinct vertices in `vs` is adjacent.
  bool is_clique(std::span<const Vertex> vs) const;

  /// Subgraph induced by `vs`; vertex i of the result is vs[i].
  Graph induced(std::span<const Vertex> vs) const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

/// Graph whose edges are exactly the non-edges of `g`.
Graph complement(const Graph& g);

struct UnionResult {
  Graph graph;
  /// offsets[i] is the index of the first vertex of parts[i] in `graph`.
  std::vector<int> offsets;
};

/// Disjoint union; vertex blocks follow the order of `parts`. Labels are
/// carried over when every part is labeled.
UnionResult disjoint_union(std::span<const Graph> parts);

/// Disjoint union of `g` and `h` plus every edge between them.
Graph join(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace equicolor
