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

#include "equicolor/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace equicolor {
namespace {

void check_cap(const Graph& g, int max_vertices, const char* what) {
  if (g.num_vertices() > max_vertices) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(g.num_vertices()) + " vertices exceeds cap " +
                          std::to_string(max_vertices));
  }
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

// Component by component; inside a component always take the vertex with
// the most already-ordered neighbors (lowest index on ties).
std::vector<Vertex> search_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> order;
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Vertex> open{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    while (!open.empty()) {
      auto best = std::min_element(open.begin(), open.end(), [&](Vertex a, Vertex b) {
        return weight[a] != weight[b] ? weight[a] > weight[b] : a < b;
      });
      const Vertex v = *best;
      open.erase(best);
      done[v] = 1;
      order.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        ++weight[u];
        if (!seen[u]) {
          seen[u] = 1;
          open.push_back(u);
        }
      }
    }
  }
  return order;
}

class EquitableSearch {
 public:
  EquitableSearch(const Graph& g, int k) : g_(g), n_(g.num_vertices()), k_(k), order_(search_order(g)) {
    q_ = n_ / k_;
    rem_ = n_ % k_;
    cap_ = q_ + (rem_ > 0 ? 1 : 0);
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    frontier_.resize(n_ + 1);
    for (int i = 0; i <= n_; ++i) {
      for (int j = 0; j < i; ++j) {
        const Vertex u = order_[j];
        const auto nb = g.neighbors(u);
        if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return pos[w] >= i; })) frontier_[i].push_back(u);
      }
    }
    failed_.resize(n_ + 1);
    color_.assign(n_, -1);
    count_.assign(k_, 0);
  }

  std::optional<Coloring> run() {
    if (!extend(0)) return std::nullopt;
    return Coloring{k_, color_};
  }

 private:
  std::vector<int> key(int i) const {
    std::vector<int> relabel(k_, -1);
    std::vector<int> out;
    std::vector<int> seen_colors;
    for (Vertex u : frontier_[i]) {
      const int c = color_[u];
      if (relabel[c] < 0) {
        relabel[c] = static_cast<int>(seen_colors.size());
        seen_colors.push_back(c);
      }
      out.push_back(relabel[c]);
    }
    for (int c : seen_colors) out.push_back(count_[c]);
    std::vector<int> rest;
    for (int c = 0; c < k_; ++c) {
      if (relabel[c] < 0) rest.push_back(count_[c]);
    }
    std::sort(rest.begin(), rest.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  bool extend(int i) {
    if (i == n_) return true;
    auto state = key(i);
    if (failed_[i].count(state)) return false;
    const Vertex v = order_[i];
    std::vector<char> blocked(k_, 0);
    for (Vertex u : g_.neighbors(v)) {
      if (color_[u] >= 0) blocked[color_[u]] = 1;
    }
    std::vector<char> on_frontier(k_, 0);
    for (Vertex u : frontier_[i]) on_frontier[color_[u]] = 1;
    int full = 0;
    for (int c = 0; c < k_; ++c) full += count_[c] > q_;
    std::vector<int> candidates(k_);
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return count_[a] < count_[b]; });
    std::vector<char> tried_count(n_ + 2, 0);
    for (int c : candidates) {
      if (blocked[c] || count_[c] + 1 > cap_) continue;
      if (count_[c] + 1 > q_ && full + 1 > rem_) continue;
      if (!on_frontier[c]) {
        // Colors absent from the frontier are interchangeable when their
        // class sizes agree.
        if (tried_count[count_[c]]) continue;
        tried_count[count_[c]] = 1;
      }
      color_[v] = c;
      ++count_[c];
      const bool ok = extend(i + 1);
      if (ok) return true;
      --count_[c];
      color_[v] = -1;
    }
    failed_[i].insert(std::move(state));
    return false;
  }

  const Graph& g_;
  int n_, k_;
  int q_ = 0, rem_ = 0, cap_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> frontier_;
  std::vector<std::unordered_set<std::vector<int>, KeyHash>> failed_;
  std::vector<int> color_;
  std::vector<int> count_;
};

}  // namespace

std::optional<Coloring> brute_equitable(const Graph& g, int k, int max_vertices) {
  check_cap(g, max_vertices, "brute_equitable");
  if (g.num_vertices() == 0) return Coloring{std::max(k, 0), {}};
  if (k < 1) return std::nullopt;
  return EquitableSearch(g, k).run();
}

Count brute_count_partitions(const Graph& g, const CliquePartitionQuery& q, int max_vertices) {
  check_cap(g, max_vertices, "brute_count_partitions");
  if (q.r < 2 || q.k < 0) throw Error("clique partition queries need r >= 2 and k >= 0");
  const int n = g.num_vertices();
  if (n > 63) throw SizeCapExceeded("brute_count_partitions: at most 63 vertices");
  const long big_total = static_cast<long>(q.r) * q.k;
  if (big_total > n || (n - big_total) % (q.r - 1) != 0) return 0;
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::function<Count(std::uint64_t, int, int)> count = [&](std::uint64_t left, int big, int small) -> Count {
    if (left == 0) return big == 0 && small == 0 ? 1 : 0;
    const int v = std::countr_zero(left);
    const std::uint64_t rest = left & ~(std::uint64_t{1} << v);
    Count total = 0;
    // Grow cliques through v from its remaining neighbors, each extension
    // taking a higher vertex than the last to avoid repeats.
    std::function<void(std::uint64_t, std::uint64_t, int)> grow = [&](std::uint64_t chosen, std::uint64_t cand,
                                                                     int size) {
      if (size == q.r && big > 0) total += count(rest & ~chosen, big - 1, small);
      if (size == q.r - 1 && small > 0) total += count(rest & ~chosen, big, small - 1);
      if (size >= q.r) return;
      while (cand) {
        const int u = std::countr_zero(cand);
        cand &= cand - 1;
        grow(chosen | (std::uint64_t{1} << u), cand & adj[u], size + 1);
      }
    };
    grow(0, rest & adj[v], 1);
    return total;
  };
  return count(all, q.k, static_cast<int>((n - big_total) / (q.r - 1)));
}

std::optional<std::vector<int>> solve_binpacking(const BinPackingInstance& inst) {
  if (inst.bins < 1 || inst.capacity < 1) throw Error("bins and capacity must be positive");
  if (inst.total() != static_cast<long>(inst.bins) * inst.capacity) return std::nullopt;
  const int n = static_cast<int>(inst.items.size());
  std::vector<int> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(), [&](int a, int b) { return inst.items[a] > inst.items[b]; });
  std::vector<int> bin(n, -1);
  std::vector<long> load(inst.bins, 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    const int item = by_size[i];
    for (int b = 0; b < inst.bins; ++b) {
      if (load[b] + inst.items[item] > inst.capacity) continue;
      bool repeat = false;
      for (int prev = 0; prev < b; ++prev) repeat = repeat || load[prev] == load[b];
      if (repeat) continue;
      load[b] += inst.items[item];
      bin[item] = b;
      if (place(i + 1)) return true;
      load[b] -= inst.items[item];
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return bin;
}

int brute_treewidth(const Graph& g, int max_vertices) {
  check_cap(g, max_vertices, "brute_treewidth");
  const int n = g.num_vertices();
  if (n == 0) return -1;
  if (n > 24) throw SizeCapExceeded("brute_treewidth: at most 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // tw[S] = min over v in S of max(tw[S - v], |Q(S - v, v)|), where Q(S, v)
  // holds the vertices outside S + v reachable from v through S.
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  std::vector<int> tw(std::size_t{1} << n, n);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const std::uint32_t without = s & ~(1u << v);
      if (tw[without] >= tw[s]) continue;
      std::uint32_t reach = 1u << v, frontier = 1u << v, outside = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        outside |= next & ~without & ~(1u << v);
        next &= without & ~reach;
        reach |= next;
        frontier = next;
      }
      tw[s] = std::min(tw[s], std::max(tw[without], std::popcount(outside)));
    }
  }
  return tw[full];
}

int brute_clique_number(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  std::vector<Vertex> current;
  std::function<void(std::vector<Vertex>)> expand = [&](std::vector<Vertex> cand) {
    best = std::max(best, static_cast<int>(current.size()));
    if (current.size() + cand.size() <= static_cast<std::size_t>(best)) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      }
      current.push_back(cand[i]);
      expand(std::move(next));
      current.pop_back();
    }
  };
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  expand(all);
  return best;
}

bool brute_has_claw(const Graph& g) {
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l) {
          if (!g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l])) return true;
        }
      }
    }
  }
  return false;
}

bool brute_is_chordal(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (int removed = 0; removed < n; ++removed) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex u : g.neighbors(v)) {
        if (!gone[u]) nb.push_back(u);
      }
      if (g.is_clique(nb)) {
        gone[v] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

int equitable_chromatic_number(const Graph& g, bool allow_fast_path, int max_vertices) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  if (allow_fast_path && brute_is_chordal(g) && !brute_has_claw(g)) return brute_clique_number(g);
  check_cap(g, max_vertices, "equitable_chromatic_number");
  for (int k = 1; k < n; ++k) {
    if (brute_equitable(g, k, max_vertices)) return k;
  }
  return n;
}

}  // namespace equicolor
