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

#include "equicolor/treedecomp.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace equicolor {
namespace {

std::string one_based(Vertex v) { return std::to_string(v + 1); }

// Tree shape check; bag contents are not inspected.
std::optional<std::string> tree_problem(const TreeDecomposition& td) {
  const int b = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.tree.size()) != b) return "tree adjacency size differs from bag count";
  std::size_t degree_sum = 0;
  for (int i = 0; i < b; ++i) {
    for (int j : td.tree[i]) {
      if (j < 0 || j >= b) return "tree edge to nonexistent bag " + std::to_string(j + 1);
      if (j == i) return "tree self-loop at bag " + std::to_string(i + 1);
      if (std::count(td.tree[j].begin(), td.tree[j].end(), i) != 1) {
        return "tree edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1) + " is not symmetric";
      }
    }
    degree_sum += td.tree[i].size();
  }
  if (b == 0) return std::nullopt;
  if (degree_sum != 2 * static_cast<std::size_t>(b - 1)) return "bag tree has a cycle or is disconnected";
  std::vector<char> seen(b, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : td.tree[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != b) return "bag tree is disconnected";
  return std::nullopt;
}

std::vector<std::vector<int>> bags_of_vertices(const TreeDecomposition& td) {
  std::vector<std::vector<int>> where(td.num_vertices);
  for (int i = 0; i < static_cast<int>(td.bags.size()); ++i) {
    for (Vertex v : td.bags[i]) where[v].push_back(i);
  }
  return where;
}

std::optional<Vertex> disconnected_vertex(const TreeDecomposition& td) {
  const auto where = bags_of_vertices(td);
  std::vector<int> mark(td.bags.size(), -1);
  for (Vertex v = 0; v < td.num_vertices; ++v) {
    if (where[v].empty()) continue;
    for (int i : where[v]) mark[i] = v;
    std::vector<int> stack{where[v].front()};
    mark[where[v].front()] = -2 - v;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : td.tree[x]) {
        if (mark[y] == v) {
          mark[y] = -2 - v;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != where[v].size()) return v;
  }
  return std::nullopt;
}

std::optional<std::string> range_problem(const TreeDecomposition& td) {
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= td.num_vertices) {
        return "bag " + std::to_string(i + 1) + " holds vertex " + one_based(v) + " out of range";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::vector<std::pair<int, int>> TreeDecomposition::tree_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    for (int j : tree[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeDecomposition decompose_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.row(v);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  TreeDecomposition td;
  td.num_vertices = n;
  td.bags.resize(n);
  td.tree.assign(n, {});
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (auto b = fill[v].find_first(); b != VertexSet::npos; b = fill[v].find_next(b)) {
      if (pos[b] > i) later.push_back(static_cast<Vertex>(b));
    }
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) fill[a].set(b);
      }
    }
    td.bags[i] = later;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    int first = -1;
    for (Vertex a : later) {
      if (first < 0 || pos[a] < first) first = pos[a];
    }
    parent[i] = first;
  }
  // Bag i hangs under the bag of its earliest later neighbor; component
  // roots are chained together.
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    int p = parent[i];
    if (p < 0) {
      if (previous_root >= 0) p = previous_root;
      previous_root = i;
    }
    if (p >= 0) {
      td.tree[i].push_back(p);
      td.tree[p].push_back(i);
    }
  }
  return td;
}

TreeDecomposition decompose_minfill(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.row(v);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (auto b = fill[v].find_first(); b != VertexSet::npos; b = fill[v].find_next(b)) {
        nb.push_back(static_cast<Vertex>(b));
      }
      // Each adjacent pair inside N(v) is seen from both ends.
      long adjacent_twice = 0;
      for (Vertex a : nb) adjacent_twice += static_cast<long>((fill[a] & fill[v]).count());
      const long missing = static_cast<long>(nb.size() * (nb.size() - 1) / 2) - adjacent_twice / 2;
      if (best < 0 || missing < best_fill || (missing == best_fill && nb.size() < best_deg)) {
        best = v;
        best_fill = missing;
        best_deg = nb.size();
      }
    }
    gone[best] = 1;
    order.push_back(best);
    std::vector<Vertex> nb;
    for (auto b = fill[best].find_first(); b != VertexSet::npos; b = fill[best].find_next(b)) {
      nb.push_back(static_cast<Vertex>(b));
    }
    for (Vertex a : nb) {
      fill[a].reset(best);
      for (Vertex c : nb) {
        if (a != c) fill[a].set(c);
      }
    }
    fill[best].reset();
  }
  return decompose_from_ordering(g, order);
}

TreeDecomposition parse_td(std::string_view text) {
  std::istringstream in{std::string(text)};
  TreeDecomposition td;
  bool have_header = false;
  int declared_size = 0;
  std::vector<char> bag_seen;
  std::string line;
  int lineno = 0;
  int edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    auto read_int = [&](const char* what) {
      long value = 0;
      if (!(fields >> value)) throw ParseError(lineno, std::string("expected ") + what);
      return value;
    };
    auto expect_end = [&] {
      std::string extra;
      if (fields >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
    };
    if (tag == "s") {
      if (have_header) throw ParseError(lineno, "duplicate solution line");
      std::string kind;
      if (!(fields >> kind) || kind != "td") throw ParseError(lineno, "expected 's td'");
      const long nb = read_int("bag count");
      const long size = read_int("maximum bag size");
      const long nv = read_int("vertex count");
      expect_end();
      if (nb < 0 || size < 0 || nv < 0) throw ParseError(lineno, "negative count in solution line");
      have_header = true;
      declared_size = static_cast<int>(size);
      td.num_vertices = static_cast<int>(nv);
      td.bags.assign(nb, {});
      td.tree.assign(nb, {});
      bag_seen.assign(nb, 0);
    } else if (!have_header) {
      throw ParseError(lineno, "content before solution line");
    } else if (tag == "b") {
      const long id = read_int("bag id");
      if (id < 1 || id > static_cast<long>(td.bags.size())) {
        throw ParseError(lineno, "bag id " + std::to_string(id) + " out of range");
      }
      if (bag_seen[id - 1]) throw ParseError(lineno, "bag " + std::to_string(id) + " defined twice");
      bag_seen[id - 1] = 1;
      long v = 0;
      auto& bag = td.bags[id - 1];
      while (fields >> v) {
        if (v < 1 || v > td.num_vertices) {
          throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
        }
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      if (!fields.eof()) throw ParseError(lineno, "malformed bag line");
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    } else {
      long a = 0;
      try {
        a = std::stol(tag);
      } catch (const std::exception&) {
        throw ParseError(lineno, "unknown line type '" + tag + "'");
      }
      const long b = read_int("tree edge endpoint");
      expect_end();
      const long nb = static_cast<long>(td.bags.size());
      if (a < 1 || a > nb || b < 1 || b > nb) throw ParseError(lineno, "tree edge endpoint out of range");
      td.tree[a - 1].push_back(static_cast<int>(b - 1));
      td.tree[b - 1].push_back(static_cast<int>(a - 1));
      ++edges;
    }
  }
  if (!have_header) throw ParseError(0, "missing solution line");
  for (std::size_t i = 0; i < bag_seen.size(); ++i) {
    if (!bag_seen[i]) throw ParseError(0, "bag " + std::to_string(i + 1) + " is never defined");
  }
  if (td.width() + 1 != declared_size && !(td.bags.empty() && declared_size == 0)) {
    throw ParseError(0, "declared maximum bag size " + std::to_string(declared_size) +
                            " but largest bag has " + std::to_string(td.width() + 1) + " vertices");
  }
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.num_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [i, j] : td.tree_edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
  auto fail = [](TdCondition c, std::string msg) { return TdReport{c, std::move(msg)}; };
  if (td.num_vertices != g.num_vertices()) {
    return fail(TdCondition::kVertexCount, "decomposition has " + std::to_string(td.num_vertices) +
                                               " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  if (auto problem = range_problem(td)) return fail(TdCondition::kVertexCount, *problem);
  if (auto problem = tree_problem(td)) return fail(TdCondition::kNotATree, *problem);
  const auto where = bags_of_vertices(td);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (where[v].empty()) return fail(TdCondition::kUncoveredVertex, "vertex " + one_based(v) + " uncovered");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : where[u]) {
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return fail(TdCondition::kUncoveredEdge, "edge " + one_based(u) + "-" + one_based(v) + " uncovered");
    }
  }
  if (auto v = disconnected_vertex(td)) {
    return fail(TdCondition::kDisconnectedVertex,
                "bags containing vertex " + one_based(*v) + " do not form a connected subtree");
  }
  return {};
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  td.num_vertices = num_vertices;
  td.tree.assign(nodes.size(), {});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags.push_back(nodes[i].bag);
    for (int c : nodes[i].children) {
      td.tree[i].push_back(c);
      td.tree[c].push_back(static_cast<int>(i));
    }
  }
  return td;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td) { out_.num_vertices = td.num_vertices; }

  NiceTreeDecomposition build() {
    if (td_.bags.empty()) {
      out_.root = add({NiceKind::kLeaf, -1, {}, {}});
      return std::move(out_);
    }
    int top = subtree(0, -1);
    out_.root = transition(top, td_.bags[0], {});
    return std::move(out_);
  }

 private:
  int add(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  int introduce(int child, Vertex v) {
    auto bag = out_.nodes[child].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return add({NiceKind::kIntroduce, v, std::move(bag), {child}});
  }

  int forget(int child, Vertex v) {
    auto bag = out_.nodes[child].bag;
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    return add({NiceKind::kForget, v, std::move(bag), {child}});
  }

  // Forget what leaves, then introduce what enters.
  int transition(int node, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    for (Vertex v : from) {
      if (!std::binary_search(to.begin(), to.end(), v)) node = forget(node, v);
    }
    for (Vertex v : to) {
      if (!std::binary_search(from.begin(), from.end(), v)) node = introduce(node, v);
    }
    return node;
  }

  int subtree(int t, int parent) {
    const auto& bag = td_.bags[t];
    std::vector<int> branches;
    for (int c : td_.tree[t]) {
      if (c == parent) continue;
      branches.push_back(transition(subtree(c, t), td_.bags[c], bag));
    }
    if (branches.empty()) return transition(add({NiceKind::kLeaf, -1, {}, {}}), {}, bag);
    int node = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) {
      node = add({NiceKind::kJoin, -1, bag, {node, branches[i]}});
    }
    return node;
  }

  const TreeDecomposition& td_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  if (auto problem = range_problem(td)) throw InvalidDecomposition(*problem);
  if (auto problem = tree_problem(td)) throw InvalidDecomposition(*problem);
  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw InvalidDecomposition("bags must be sorted and duplicate-free");
    }
  }
  if (auto v = disconnected_vertex(td)) {
    throw InvalidDecomposition("bags containing vertex " + one_based(*v) + " do not form a connected subtree");
  }
  return NiceBuilder(td).build();
}

std::string validate_nice(const NiceTreeDecomposition& ntd) {
  const int count = static_cast<int>(ntd.nodes.size());
  if (count == 0 || ntd.root < 0 || ntd.root >= count) return "missing root";
  if (!ntd.nodes[ntd.root].bag.empty()) return "root bag is not empty";
  std::vector<int> parents(count, 0);
  std::vector<int> forgotten(ntd.num_vertices, 0);
  for (int x = 0; x < count; ++x) {
    const auto& node = ntd.nodes[x];
    const std::string at = "node " + std::to_string(x) + ": ";
    for (int c : node.children) {
      if (c < 0 || c >= x) return at + "child index must precede parent";
      ++parents[c];
    }
    std::size_t expected_children = node.kind == NiceKind::kLeaf ? 0 : node.kind == NiceKind::kJoin ? 2 : 1;
    if (node.children.size() != expected_children) return at + "wrong number of children";
    switch (node.kind) {
      case NiceKind::kLeaf:
        if (!node.bag.empty()) return at + "leaf bag is not empty";
        break;
      case NiceKind::kIntroduce: {
        const auto& child = ntd.nodes[node.children[0]].bag;
        auto expect = child;
        if (std::binary_search(child.begin(), child.end(), node.vertex)) return at + "introduced vertex already in child";
        expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) return at + "introduce bag is not child bag plus vertex";
        break;
      }
      case NiceKind::kForget: {
        const auto& child = ntd.nodes[node.children[0]].bag;
        auto expect = node.bag;
        if (std::binary_search(node.bag.begin(), node.bag.end(), node.vertex)) return at + "forgotten vertex still in bag";
        expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != child) return at + "child bag is not forget bag plus vertex";
        if (node.vertex < 0 || node.vertex >= ntd.num_vertices) return at + "vertex out of range";
        ++forgotten[node.vertex];
        break;
      }
      case NiceKind::kJoin:
        if (ntd.nodes[node.children[0]].bag != node.bag || ntd.nodes[node.children[1]].bag != node.bag) {
          return at + "join children bags differ";
        }
        break;
    }
  }
  for (int x = 0; x < count; ++x) {
    if (x == ntd.root ? parents[x] != 0 : parents[x] != 1) return "node " + std::to_string(x) + " is not in the rooted tree";
  }
  for (Vertex v = 0; v < ntd.num_vertices; ++v) {
    if (forgotten[v] != 1) return "vertex " + one_based(v) + " forgotten " + std::to_string(forgotten[v]) + " times";
  }
  return {};
}

}  // namespace equicolor
