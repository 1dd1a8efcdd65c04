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

#include "equicolor/clawfree.hpp"

#include <algorithm>
#include <string>

namespace equicolor {
namespace {

std::string describe_claw(const Claw& claw) {
  return "graph is not claw-free; center " + std::to_string(claw[0]) + " with independent neighbors " +
         std::to_string(claw[1]) + ", " + std::to_string(claw[2]) + ", " + std::to_string(claw[3]);
}

bool contains(std::span<const Vertex> set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

NotClawFreeError::NotClawFreeError(Claw claw) : Error(describe_claw(claw)), claw_(claw) {}

BalancedColoringState::BalancedColoringState(int num_vertices, int k)
    : k_(k), color_(num_vertices, -1), size_(k, 0) {
  if (k < 1) throw Error("number of colors must be positive");
}

std::vector<int> BalancedColoringState::minus_colors() const {
  std::vector<int> out;
  for (int c = 0; c < k_; ++c) {
    if (is_minus(c)) out.push_back(c);
  }
  return out;
}

std::vector<int> BalancedColoringState::plus_colors() const {
  std::vector<int> out;
  for (int c = 0; c < k_; ++c) {
    if (!is_minus(c)) out.push_back(c);
  }
  return out;
}

bool BalancedColoringState::balanced() const {
  const int lo = colored_ / k_;
  int plus = 0;
  for (int s : size_) {
    if (s != lo && s != lo + 1) return false;
    plus += s == lo + 1;
  }
  return plus == colored_ % k_;
}

void BalancedColoringState::assign(Vertex v, int c) {
  if (color_[v] >= 0) throw Error("vertex " + std::to_string(v) + " is already colored");
  color_[v] = c;
  ++size_[c];
  ++colored_;
}

void BalancedColoringState::recolor(Vertex v, int c) {
  --size_[color_[v]];
  color_[v] = c;
  ++size_[c];
}

std::vector<BicoloredComponent> bicolored_components(const Graph& g,
                                                     const BalancedColoringState& state,
                                                     int c, int d) {
  if (c == d) throw Error("bicolored_components needs two distinct colors");
  const int n = g.num_vertices();
  auto in_pair = [&](Vertex v) { return state.color_of(v) == c || state.color_of(v) == d; };
  std::vector<char> seen(n, 0);
  std::vector<BicoloredComponent> out;
  std::vector<Vertex> members;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || !in_pair(s)) continue;
    members.assign(1, s);
    seen[s] = 1;
    std::size_t twice_edges = 0;
    Vertex endpoint = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      int deg = 0;
      for (Vertex w : g.neighbors(members[i])) {
        if (!in_pair(w)) continue;
        ++deg;
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
      if (deg > 2) throw ComponentNotPath("vertex " + std::to_string(members[i]) + " has " +
                                          std::to_string(deg) + " neighbors in the two classes");
      if (deg <= 1 && endpoint < 0) endpoint = members[i];
      twice_edges += deg;
    }
    if (twice_edges / 2 != members.size() - 1 || endpoint < 0) {
      throw ComponentNotPath("component of vertex " + std::to_string(s) + " contains a cycle");
    }
    BicoloredComponent comp{c, d, {}};
    Vertex prev = -1;
    for (Vertex cur = endpoint; cur >= 0;) {
      comp.path.push_back(cur);
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != prev && in_pair(w)) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

void swap_path(BalancedColoringState& state, const BicoloredComponent& component,
               std::span<const Vertex> active_clique) {
  const auto& path = component.path;
  if (path.empty()) throw Error("swap_path: empty component");
  if (state.color_of(path.front()) != component.d || state.color_of(path.back()) != component.d) {
    throw Error("swap_path: endpoints must carry color d");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int expected = i % 2 == 0 ? component.d : component.c;
    if (state.color_of(path[i]) != expected) throw Error("swap_path: path does not alternate");
    if (contains(active_clique, path[i])) throw Error("swap_path: path meets the active clique");
  }
  for (Vertex v : path) {
    state.recolor(v, state.color_of(v) == component.d ? component.c : component.d);
  }
}

InsertOutcome insert_vertex(const Graph& g, BalancedColoringState& state, Vertex v,
                            std::span<const Vertex> clique) {
  const int k = state.k();
  if (static_cast<int>(clique.size()) >= k) throw Error("insert_vertex: clique does not fit in k-1 colors");
  std::vector<char> used(k, 0);
  for (Vertex u : clique) {
    if (!state.is_colored(u)) throw Error("insert_vertex: clique vertex is uncolored");
    used[state.color_of(u)] = 1;
  }
  InsertOutcome outcome;
  for (int c = 0; c < k; ++c) {
    if (state.is_minus(c) && !used[c]) {
      state.assign(v, c);
      outcome.color = c;
      return outcome;
    }
  }
  for (int c = 0; c < k; ++c) {
    if (!state.is_minus(c) || !used[c]) continue;
    for (int d = 0; d < k; ++d) {
      if (state.is_minus(d) || used[d]) continue;
      for (auto& comp : bicolored_components(g, state, c, d)) {
        if (comp.first_color(state) != d || comp.last_color(state) != d) continue;
        const bool meets = std::any_of(comp.path.begin(), comp.path.end(),
                                       [&](Vertex x) { return contains(clique, x); });
        if (meets) continue;
        swap_path(state, comp, clique);
        state.assign(v, d);
        outcome.color = d;
        outcome.swapped = std::move(comp);
        return outcome;
      }
    }
  }
  throw RecoloringNotFound("no d..d bicolored path disjoint from the neighborhood of vertex " +
                           std::to_string(v));
}

std::variant<Coloring, Infeasible> equitable_color_clawfree(const Graph& g, int k,
                                                           const StepObserver& observer) {
  if (k < 1) throw Error("number of colors must be positive");
  auto chordality = mcs_peo(g);
  if (!chordality.chordal()) throw NotChordalError(std::move(chordality.hole));
  const auto& peo = chordality.peo;
  if (auto claw = find_claw(g, peo)) throw NotClawFreeError(*claw);
  const int omega = max_clique_size(g, peo);
  if (omega > k) return Infeasible{omega};

  BalancedColoringState state(g.num_vertices(), k);
  std::vector<Vertex> clique;
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    const Vertex v = *it;
    clique.clear();
    for (Vertex w : g.neighbors(v)) {
      if (state.is_colored(w)) clique.push_back(w);
    }
    auto outcome = insert_vertex(g, state, v, clique);
    if (observer) observer(state, v, outcome);
  }
  return state.to_coloring();
}

}  // namespace equicolor
