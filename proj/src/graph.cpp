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

#include "equicolor/graph.hpp"

#include <algorithm>
#include <queue>

#include "equicolor/error.hpp"

namespace equicolor {

Graph::Graph(int n) : n_(n), adj_(n), rows_(n, VertexSet(n)) {
  if (n < 0) throw Error("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") has an endpoint out of range");
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) continue;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  return labels_.empty() ? kEmpty : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw Error("label count does not match vertex count");
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool Graph::is_clique(std::span<const Vertex> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  std::vector<int> position(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) position[vs[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (Vertex w : adj_[vs[i]]) {
      int j = position[w];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vs.size()), es);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
    }
  }
  Graph out(n, es);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
    out = out.with_labels(std::move(labels));
  }
  return out;
}

UnionResult disjoint_union(std::span<const Graph> parts) {
  UnionResult result;
  int total = 0;
  bool labeled = !parts.empty();
  for (const Graph& p : parts) {
    result.offsets.push_back(total);
    total += p.num_vertices();
    labeled = labeled && p.has_labels();
  }
  std::vector<Edge> es;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int off = result.offsets[i];
    for (auto [u, v] : parts[i].edges()) es.emplace_back(u + off, v + off);
    if (labeled) {
      for (Vertex v = 0; v < parts[i].num_vertices(); ++v) labels.push_back(parts[i].label(v));
    }
  }
  result.graph = Graph(total, es);
  if (labeled) result.graph = result.graph.with_labels(std::move(labels));
  return result;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.num_vertices();
  std::vector<Edge> es = g.edges();
  for (auto [u, v] : h.edges()) es.emplace_back(u + ng, v + ng);
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = 0; v < h.num_vertices(); ++v) es.emplace_back(u, v + ng);
  }
  Graph out(ng + h.num_vertices(), es);
  if (g.has_labels() && h.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < ng; ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < h.num_vertices(); ++v) labels.push_back(h.label(v));
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph(leaves + 1, es);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace equicolor
