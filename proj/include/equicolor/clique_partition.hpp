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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/error.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/ring.hpp"
#include "equicolor/subset_convolution.hpp"
#include "equicolor/treedecomp.hpp"

namespace equicolor {

/// Partition shape: k cliques of size r, and (n - r*k) / (r - 1) cliques of
/// size r - 1.
struct CliquePartitionQuery {
  int r = 2;
  int k = 0;

  /// True when r >= 2, k >= 0, r*k <= n and (r - 1) divides n - r*k.
  bool shape_valid(int n) const;
  /// Number of (r-1)-cliques implied for an n-vertex graph; requires a
  /// valid shape.
  int small_cliques(int n) const { return (n - r * k) / (r - 1); }
};

/// Equitable coloring needs no clique partition when every class has at
/// most one vertex (k_colors >= n).
struct TrivialEquitable {};

/// Maps an equitable k_colors-coloring of an n-vertex graph to the clique
/// partition shape of its complement: r = ceil(n / k_colors) and k = the
/// number of classes of that size.
std::variant<CliquePartitionQuery, TrivialEquitable> equitable_params(int n, int k_colors);

/// Indicator over subsets A of `bag` minus `v`: 1 iff |A| = l - 1, A lies in
/// N(v), and A is a clique, i.e. A + v is an l-clique through v.
template <class T>
SetFunction<T> clique_indicator(const Graph& g, int l, Vertex v, std::span<const Vertex> bag);

/// Table f_x(S, k') of one nice-decomposition node. by_k[k'][S] with S a
/// bitmask over the node's sorted bag.
template <class T>
struct DpTable {
  int bag_size = 0;
  std::vector<std::vector<T>> by_k;

  const T& at(Mask s, int k) const { return by_k[k][s]; }
};

struct NodeStat {
  int node = 0;
  NiceKind kind = NiceKind::kLeaf;
  int bag_size = 0;
  int child_bag_size = 0;
  double seconds = 0;
};

struct CountOptions {
  /// Keep every node table after counting (needed by recover_partition).
  bool keep_tables = true;
  /// Worker threads per node; 0 reads EQUICOLOR_THREADS, else hardware.
  int threads = 0;
  /// When set, receives one entry per node.
  std::vector<NodeStat>* stats = nullptr;
};

/// Sorted vertex sets covering V; exactly `k` of them have r vertices and
/// the rest r - 1.
struct PartitionWitness {
  std::vector<std::vector<Vertex>> cliques;
};

/// Empty string when `w` is a valid partition of `g` with shape `q`;
/// otherwise the first violated invariant.
std::string witness_problem(const Graph& g, const CliquePartitionQuery& q, const PartitionWitness& w);

class CorruptTables : public Error {
 public:
  using Error::Error;
};

/// Dynamic program over a nice tree decomposition counting clique
/// partitions of shape q. Cliques are closed at forget nodes; forget and
/// join nodes are evaluated with ranked fast subset convolution.
template <class T>
class CliquePartitionCounter {
 public:
  /// `unit` seeds the leaf tables; modular rings pass a one that carries
  /// their modulus.
  CliquePartitionCounter(const Graph& g, const NiceTreeDecomposition& ntd, CliquePartitionQuery q,
                         CountOptions options = {}, T unit = T(1));

  /// Runs the table computation once and returns f_root(empty, k). Zero when
  /// the shape is invalid.
  const T& count();

  /// Witness from the retained tables, or nullopt when the count is zero.
  /// Without retained tables, child tables are recomputed on demand.
  std::optional<PartitionWitness> recover();

  bool shape_valid() const noexcept { return shape_valid_; }
  const DpTable<T>& table(int node) const { return tables_.at(node); }
  bool has_table(int node) const { return !tables_.at(node).by_k.empty(); }

 private:
  DpTable<T> compute_node(int x, const std::vector<const DpTable<T>*>& children) const;
  DpTable<T> compute_subtree(int x) const;
  DpTable<T> leaf() const;
  DpTable<T> introduce(int x, const DpTable<T>& child) const;
  DpTable<T> forget(int x, const DpTable<T>& child) const;
  DpTable<T> join(int x, const DpTable<T>& left, const DpTable<T>& right) const;

  const Graph& g_;
  const NiceTreeDecomposition& ntd_;
  CliquePartitionQuery q_;
  CountOptions options_;
  T unit_;
  bool shape_valid_;
  bool computed_ = false;
  T root_count_{};
  std::vector<DpTable<T>> tables_;
};

extern template class CliquePartitionCounter<Count>;
extern template class CliquePartitionCounter<ModNum>;

struct CountResult {
  Count count;
  bool shape_valid = true;
  int width = -1;
  std::optional<PartitionWitness> witness;
};

/// Exact number of partitions of g into q.k cliques of size q.r and the
/// remaining vertices into (q.r - 1)-cliques. Throws Error for r < 2 and
/// InvalidDecomposition when ntd is not a nice decomposition of g.
CountResult count_partitions(const Graph& g, const NiceTreeDecomposition& ntd, const CliquePartitionQuery& q,
                             bool want_witness = false, CountOptions options = {});

struct ModularCountResult {
  std::uint64_t p1 = 0, p2 = 0;
  std::uint64_t r1 = 0, r2 = 0;
  /// The count reduced modulo p1 * p2.
  Count combined;
  bool nonzero = false;
  bool shape_valid = true;
  int width = -1;
  std::optional<PartitionWitness> witness;
};

/// Same DP over two random 62-bit primes drawn from `seed`.
ModularCountResult count_partitions_modular(const Graph& g, const NiceTreeDecomposition& ntd,
                                            const CliquePartitionQuery& q, std::uint64_t seed,
                                            bool want_witness = false, CountOptions options = {});

/// Witness from a counter whose tables were retained.
std::optional<PartitionWitness> recover_partition(CliquePartitionCounter<Count>& counter);

struct ComplementColoringResult {
  /// Equitable coloring, or nullopt when none exists.
  std::optional<Coloring> coloring;
  /// Number of clique partitions of the complement with the equitable
  /// shape (1 in the trivial k_colors >= n case).
  Count partitions;
  /// Width of the decomposition used for the complement; -1 when trivial.
  int complement_width = -1;
};

/// Equitable k_colors-coloring via clique partitions of the complement:
/// complement, min-fill decomposition, nice form, count, witness.
ComplementColoringResult equitable_color_via_complement(const Graph& g, int k_colors);

}  // namespace equicolor
