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

#include "equicolor/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace equicolor {
namespace {

// Shortest path from `from` to `to` avoiding `center` and every other
// neighbor of `center`. Returns an empty vector when none exists.
std::vector<Vertex> path_avoiding(const Graph& g, Vertex center, Vertex from, Vertex to) {
  const int n = g.num_vertices();
  std::vector<Vertex> parent(n, -2);
  auto blocked = [&](Vertex x) {
    return x == center || (g.adjacent(center, x) && x != from && x != to);
  };
  std::queue<Vertex> frontier;
  parent[from] = -1;
  frontier.push(from);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    if (u == to) break;
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != -2 || blocked(w)) continue;
      parent[w] = u;
      frontier.push(w);
    }
  }
  if (parent[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// Cycle center-from-...-to; chordless when from/to are non-adjacent and the
// path is a shortest one outside N[center].
std::vector<Vertex> hole_through(const Graph& g, Vertex center, Vertex from, Vertex to) {
  auto path = path_avoiding(g, center, from, to);
  if (path.empty()) return {};
  path.insert(path.begin(), center);
  return path;
}

std::vector<Vertex> find_hole(const Graph& g, Vertex v, Vertex p, Vertex w) {
  if (auto hole = hole_through(g, v, p, w); !hole.empty()) return hole;
  // Every chordless cycle C has a vertex whose two cycle neighbors are
  // joined by the rest of C outside its closed neighborhood.
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto hole = hole_through(g, c, nb[i], nb[j]); !hole.empty()) return hole;
      }
    }
  }
  return {};
}

std::string describe_hole(const std::vector<Vertex>& hole) {
  std::string s = "graph is not chordal; induced cycle:";
  for (Vertex v : hole) s += ' ' + std::to_string(v);
  return s;
}

std::vector<int> positions(std::span<const Vertex> order, int n) {
  std::vector<int> pos(n);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace

NotChordalError::NotChordalError(std::vector<Vertex> hole)
    : Error(describe_hole(hole)), hole_(std::move(hole)) {}

ChordalityResult mcs_peo(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }

  ChordalityResult result;
  result.peo.assign(visit.rbegin(), visit.rend());
  const auto pos = positions(result.peo, n);

  // Zero fill-in test: the later neighbors of v minus its earliest later
  // neighbor p must all be adjacent to p.
  for (Vertex v : result.peo) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) {
        result.hole = find_hole(g, v, parent, w);
        result.peo.clear();
        return result;
      }
    }
  }
  return result;
}

int max_clique_size(const Graph& g, std::span<const Vertex> peo) {
  const auto pos = positions(peo, g.num_vertices());
  int best = g.num_vertices() > 0 ? 1 : 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int later = 1;
    for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
    best = std::max(best, later);
  }
  return best;
}

int max_clique_size(const Graph& g) {
  auto res = mcs_peo(g);
  if (!res.chordal()) throw NotChordalError(std::move(res.hole));
  return max_clique_size(g, res.peo);
}

CliqueTree clique_tree(const Graph& g) {
  auto res = mcs_peo(g);
  if (!res.chordal()) throw NotChordalError(std::move(res.hole));
  const int n = g.num_vertices();
  const auto pos = positions(res.peo, n);

  std::vector<VertexSet> candidates;
  for (Vertex v : res.peo) {
    VertexSet s(n);
    s.set(v);
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) s.set(w);
    }
    candidates.push_back(std::move(s));
  }
  CliqueTree ct;
  ct.peo = res.peo;
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
      contained = j != i && candidates[i].is_proper_subset_of(candidates[j]);
    }
    if (contained) continue;
    std::vector<Vertex> members;
    for (auto b = candidates[i].find_first(); b != VertexSet::npos; b = candidates[i].find_next(b)) {
      members.push_back(static_cast<Vertex>(b));
    }
    ct.cliques.push_back(std::move(members));
    maximal.push_back(candidates[i]);
  }

  // Maximum-weight spanning tree of the clique intersection graph (Kruskal).
  const int c = static_cast<int>(maximal.size());
  std::vector<std::tuple<int, int, int>> pairs;
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      pairs.emplace_back(static_cast<int>((maximal[i] & maximal[j]).count()), i, j);
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
  std::vector<int> root(c);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  ct.tree.assign(c, {});
  for (auto [w, i, j] : pairs) {
    int a = find(i), b = find(j);
    if (a == b) continue;
    root[a] = b;
    ct.tree[i].push_back(j);
    ct.tree[j].push_back(i);
  }
  return ct;
}

int max_induced_star(const Graph& g, int r_cap) {
  int best = 0;
  std::vector<Vertex> chosen;
  for (Vertex center = 0; center < g.num_vertices() && best < r_cap; ++center) {
    auto nb = g.neighbors(center);
    if (static_cast<int>(nb.size()) <= best) continue;
    // Depth-first growth of independent sets inside N(center).
    auto grow = [&](auto&& self, std::size_t from) -> void {
      best = std::max(best, static_cast<int>(chosen.size()));
      if (best >= r_cap) return;
      for (std::size_t i = from; i < nb.size(); ++i) {
        if (static_cast<int>(chosen.size() + (nb.size() - i)) <= best) return;
        bool independent = std::none_of(chosen.begin(), chosen.end(),
                                        [&](Vertex u) { return g.adjacent(u, nb[i]); });
        if (!independent) continue;
        chosen.push_back(nb[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    grow(grow, 0);
  }
  return std::min(best, r_cap);
}

std::optional<Claw> find_claw(const Graph& g, std::span<const Vertex> peo) {
  for (Vertex center = 0; center < g.num_vertices(); ++center) {
    if (g.degree(center) < 3) continue;
    std::vector<Vertex> picked;
    for (Vertex u : peo) {
      if (!g.adjacent(center, u)) continue;
      bool free = std::none_of(picked.begin(), picked.end(),
                               [&](Vertex w) { return g.adjacent(u, w); });
      if (!free) continue;
      picked.push_back(u);
      if (picked.size() == 3) return Claw{center, picked[0], picked[1], picked[2]};
    }
  }
  return std::nullopt;
}

}  // namespace equicolor
