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

#include "json.hpp"

#include "equicolor/coloring.hpp"
#include "equicolor/error.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Exact-fill bin packing: split `items` into `bins` groups each summing to
/// `capacity`.
struct BinPackingInstance {
  std::vector<int> items;
  int bins = 1;
  int capacity = 1;

  long total() const;
  /// Items sum to bins * capacity.
  bool exact() const { return total() == static_cast<long>(bins) * capacity; }
};

class Overfull : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class MalformedColoring : public Error {
 public:
  using Error::Error;
};

/// Pads the instance with unit items until the items sum to bins * capacity.
/// Throws Overfull when they already exceed it, Error on non-positive
/// parameters.
BinPackingInstance normalize(const BinPackingInstance& inst);

enum class GadgetKind { kAntiflower, kFlower, kTrem };

enum class Role { kHub, kClique, kPetal };

std::string_view role_name(Role r);

/// Position of a vertex inside a reduction. `gadget` is the item index, or
/// -1 for the central flower of block instances; `part` numbers the hubs and
/// cliques inside a gadget; `index` is the position inside that part.
struct VertexRole {
  int gadget = -1;
  Role role = Role::kHub;
  int part = 0;
  int index = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Gadget graphs, labeled with their parts.
///
///   antiflower(a, k): K_{k-1} joined with a+1 independent vertices;
///                     vertices 0..k-2 form the clique.
///   flower(a, k):     one hub joined with a+1 disjoint copies of K_{k-1};
///                     vertex 0 is the hub.
///   trem(a, k):       hubs y_1..y_a; y_i is joined with two private
///                     (k-1)-cliques Q_i, Q'_i and, for i < a, with
///                     Q_{i+1}. Laid out as y_i, Q_i, Q'_i per i.
///
/// Requires a >= 1 and k >= 2.
Graph build_gadget(GadgetKind kind, int a, int k);

/// Roles of the vertices of build_gadget(kind, a, k), with gadget = -1.
std::vector<VertexRole> gadget_roles(GadgetKind kind, int a, int k);

enum class ReductionKind { kSplitUnion, kBlock, kInterval };

std::string_view reduction_name(ReductionKind kind);
/// Inverse of reduction_name ("split-union", "block", "interval").
ReductionKind parse_reduction_kind(std::string_view name);

struct ReductionInstance {
  ReductionKind kind = ReductionKind::kSplitUnion;
  BinPackingInstance packing;
  Graph graph;
  int colors = 0;
  std::vector<VertexRole> roles;
};

/// Equitable coloring instance for a normalized packing instance:
///   split-union: union of antiflower(a_j, k); k colors; n*k + k*B vertices.
///   block:       flower(a_j, k+1) per item plus a central flower(B, k+1)
///                whose hub is adjacent to every item hub; k+1 colors;
///                (k+1)(kB + n + 1) vertices.
///   interval:    union of trem(a_j, k); k colors; k(2kB - B) vertices.
/// Throws NotNormalized when the items do not sum to k*B, Error when k is
/// below the gadget minimum (2 for split-union and interval).
ReductionInstance build_reduction(ReductionKind kind, const BinPackingInstance& inst);

/// Bin (0..k-1) of every item read off an equitable coloring of the
/// reduction graph. Block colorings are relabeled so that the central hub's
/// color comes last. Throws MalformedColoring when the coloring is not a
/// proper equitable coloring with `ri.colors` colors or a gadget's control
/// vertices break the expected pattern.
std::vector<int> decode_packing(const ReductionInstance& ri, const Coloring& c);

inline constexpr std::string_view kSidecarSchema = "equicolor.reduction/1";

/// {"schema", "kind", "items", "k", "B", "colors", "roles"}; roles are
/// listed per vertex in DIMACS order.
nlohmann::json reduction_sidecar(const ReductionInstance& ri);

/// Rebuilds a reduction from its sidecar and checks the recorded roles.
ReductionInstance reduction_from_sidecar(const nlohmann::json& sidecar);

}  // namespace equicolor
