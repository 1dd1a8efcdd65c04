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

// Shared helpers for the test binaries: random and exhaustive graph
// sources plus a few definition-level checkers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/treedecomp.hpp"

namespace equicolor::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return Graph(n, es);
}

/// Unit interval graph on n points drawn uniformly from [0, span); vertex
/// indices are shuffled so no test depends on the sorted order.
inline Graph random_unit_interval(int n, double span, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.0, span);
  std::vector<double> x(n);
  for (auto& v : x) v = pos(rng);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(x[i] - x[j]) <= 1.0) es.emplace_back(perm[i], perm[j]);
    }
  }
  return Graph(n, es);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, es);
}

/// Intersection graph of random subtrees of a random host tree; chordal
/// by construction.
inline Graph random_chordal(int n, std::mt19937_64& rng) {
  const int hosts = std::max(1, n);
  Graph host = random_tree(hosts, rng);
  std::vector<std::vector<char>> member(n, std::vector<char>(hosts, 0));
  for (int v = 0; v < n; ++v) {
    // Grow a connected subtree from a random root.
    std::vector<int> open{static_cast<int>(rng() % hosts)};
    const int want = 1 + static_cast<int>(rng() % 3);
    int taken = 0;
    while (!open.empty() && taken < want) {
      const std::size_t pick = rng() % open.size();
      const int x = open[pick];
      open.erase(open.begin() + static_cast<long>(pick));
      if (member[v][x]) continue;
      member[v][x] = 1;
      ++taken;
      for (Vertex y : host.neighbors(x)) {
        if (!member[v][y]) open.push_back(y);
      }
    }
  }
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int x = 0; x < hosts; ++x) {
        if (member[u][x] && member[v][x]) {
          es.emplace_back(u, v);
          break;
        }
      }
    }
  }
  return Graph(n, es);
}

/// Upper-triangle adjacency bits of g relabeled by `perm` (new index of v is
/// perm[v]).
inline std::uint64_t encode(const Graph& g, const std::vector<int>& perm) {
  const int n = g.num_vertices();
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    const int bit = a * n - a * (a + 1) / 2 + (b - a - 1);
    code |= std::uint64_t{1} << bit;
  }
  return code;
}

/// Canonical code: the smallest encoding over all relabelings that respect
/// a color-refinement partition of the vertices. Intended for n <= 8.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<long> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<long>, long> ids;
    std::vector<std::vector<long>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<long> nb;
      for (Vertex u : g.neighbors(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      ids[sig[v]] = 0;
    }
    long next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<long> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = ids[sig[v]];
    if (refined == color) break;
    color = refined;
  }
  // Vertices sorted by refined color; permutations stay inside color cells.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm(n);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      for (int i = 0; i < n; ++i) perm[order[i]] = i;
      best = std::min(best, encode(g, perm));
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

/// One representative of every isomorphism class of graphs on n vertices,
/// built by adding a vertex to the classes on n - 1 vertices.
inline const std::vector<Graph>& all_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    std::set<std::uint64_t> seen;
    for (const Graph& base : all_graphs(n - 1)) {
      auto es = base.edges();
      for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
        auto grown = es;
        for (int u = 0; u < n - 1; ++u) {
          if (s >> u & 1) grown.emplace_back(u, n - 1);
        }
        Graph g(n, grown);
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      }
    }
  }
  return cache[n] = std::move(out);
}

/// Proper, and equitable when asked, straight from the definitions.
inline bool coloring_ok_by_definition(const Graph& g, const Coloring& c, bool equitable) {
  const int n = g.num_vertices();
  if (static_cast<int>(c.color.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.k) return false;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) && c.color[u] == c.color[v]) return false;
    }
  }
  if (!equitable) return true;
  std::vector<int> size(c.k, 0);
  for (int v = 0; v < n; ++v) ++size[c.color[v]];
  const auto [lo, hi] = std::minmax_element(size.begin(), size.end());
  return c.k == 0 || *hi - *lo <= 1;
}

/// Tree decomposition axioms checked directly: tree shape, coverage, and
/// for every pair of bags holding v, every bag on the path between them
/// also holds v.
inline bool td_ok_by_definition(const Graph& g, const TreeDecomposition& td) {
  const int b = static_cast<int>(td.bags.size());
  if (td.num_vertices != g.num_vertices()) return false;
  if (b == 0) return g.num_vertices() == 0;
  if (static_cast<int>(td.tree.size()) != b) return false;
  std::size_t degree_sum = 0;
  for (const auto& nb : td.tree) degree_sum += nb.size();
  if (degree_sum != 2 * static_cast<std::size_t>(b - 1)) return false;
  auto path = [&](int from, int to) {
    std::vector<int> parent(b, -2);
    std::vector<int> queue{from};
    parent[from] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int y : td.tree[queue[i]]) {
        if (parent[y] == -2) {
          parent[y] = queue[i];
          queue.push_back(y);
        }
      }
    }
    std::vector<int> p;
    if (parent[to] == -2) return p;
    for (int x = to; x != -1; x = parent[x]) p.push_back(x);
    return p;
  };
  auto holds = [&](int bag, Vertex v) { return std::binary_search(td.bags[bag].begin(), td.bags[bag].end(), v); };
  for (int j = 1; j < b; ++j) {
    if (path(0, j).empty()) return false;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool found = false;
    for (int j = 0; j < b; ++j) found = found || holds(j, v);
    if (!found) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int j = 0; j < b; ++j) found = found || (holds(j, u) && holds(j, v));
    if (!found) return false;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int i = 0; i < b; ++i) {
      for (int j = i + 1; j < b; ++j) {
        if (!holds(i, v) || !holds(j, v)) continue;
        for (int q : path(i, j)) {
          if (!holds(q, v)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace equicolor::testing
