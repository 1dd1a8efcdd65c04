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

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "equicolor/chordal.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/error.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Partial k-coloring kept balanced: class sizes differ by at most one.
///
/// With t colored vertices, the "minus" colors are those used floor(t/k)
/// times and the "plus" colors the rest (t/k + 1 times). When k divides t
/// every color is a minus color.
class BalancedColoringState {
 public:
  BalancedColoringState(int num_vertices, int k);

  int k() const noexcept { return k_; }
  int colored_count() const noexcept { return colored_; }
  int color_of(Vertex v) const { return color_[v]; }
  bool is_colored(Vertex v) const { return color_[v] >= 0; }
  int class_size(int c) const { return size_[c]; }
  const std::vector<int>& colors() const noexcept { return color_; }

  bool is_minus(int c) const { return size_[c] == colored_ / k_; }
  std::vector<int> minus_colors() const;
  std::vector<int> plus_colors() const;

  /// max - min class size <= 1 and the minus/plus split is consistent.
  bool balanced() const;

  void assign(Vertex v, int c);
  /// Moves an already colored vertex to color `c`.
  void recolor(Vertex v, int c);

  Coloring to_coloring() const { return Coloring{k_, color_}; }

 private:
  int k_;
  int colored_ = 0;
  std::vector<int> color_;
  std::vector<int> size_;
};

/// A connected component of the subgraph induced by two color classes,
/// listed end to end.
struct BicoloredComponent {
  int c = -1;
  int d = -1;
  std::vector<Vertex> path;

  int first_color(const BalancedColoringState& s) const { return s.color_of(path.front()); }
  int last_color(const BalancedColoringState& s) const { return s.color_of(path.back()); }
};

class ComponentNotPath : public Error {
 public:
  using Error::Error;
};

class RecoloringNotFound : public Error {
 public:
  using Error::Error;
};

class NotClawFreeError : public Error {
 public:
  explicit NotClawFreeError(Claw claw);
  const Claw& claw() const noexcept { return claw_; }

 private:
  Claw claw_;
};

/// Components of the subgraph induced by colors c and d, ordered by their
/// smallest vertex. Throws ComponentNotPath if one of them is not a path,
/// which cannot happen on claw-free chordal graphs.
std::vector<BicoloredComponent> bicolored_components(const Graph& g,
                                                     const BalancedColoringState& state,
                                                     int c, int d);

/// Exchanges colors c and d along a path whose endpoints are both colored d.
/// Moves one vertex from class d to class c. `active_clique` must be disjoint
/// from the path. Throws Error on a precondition violation.
void swap_path(BalancedColoringState& state, const BicoloredComponent& component,
               std::span<const Vertex> active_clique = {});

struct InsertOutcome {
  int color = -1;
  /// Set when a path swap was needed; holds the swapped component.
  std::optional<BicoloredComponent> swapped;
};

/// Colors `v`, whose colored neighbors `clique` form a clique of size at
/// most k-1, keeping the state balanced. Takes the lowest minus color
/// missing from the clique; otherwise swaps a d..d bicolored path for the
/// lowest workable (c, d) pair and gives v color d.
InsertOutcome insert_vertex(const Graph& g, BalancedColoringState& state, Vertex v,
                            std::span<const Vertex> clique);

struct Infeasible {
  int omega = 0;
};

using StepObserver = std::function<void(const BalancedColoringState&, Vertex, const InsertOutcome&)>;

/// Equitable k-coloring of a claw-free chordal graph, which exists iff the
/// clique number is at most k. Runs in O(n^2) for the coloring phase.
///
/// Throws NotChordalError, NotClawFreeError, or RecoloringNotFound. The last
/// one signals that no disjoint d..d path existed for any color pair.
std::variant<Coloring, Infeasible> equitable_color_clawfree(const Graph& g, int k,
                                                           const StepObserver& observer = {});

}  // namespace equicolor
