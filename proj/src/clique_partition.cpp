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

#include "equicolor/clique_partition.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "parallel.hpp"

namespace equicolor {
namespace {

Mask insert_bit(Mask mask, int pos, bool bit) {
  const Mask low = mask & ((Mask{1} << pos) - 1);
  return low | (static_cast<Mask>(bit) << pos) | ((mask >> pos) << (pos + 1));
}

Mask remove_bit(Mask mask, int pos) {
  const Mask low = mask & ((Mask{1} << pos) - 1);
  return low | ((mask >> (pos + 1)) << pos);
}

int position_of(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

}  // namespace

bool CliquePartitionQuery::shape_valid(int n) const {
  if (r < 2 || k < 0) return false;
  const long big = static_cast<long>(r) * k;
  return big <= n && (n - big) % (r - 1) == 0;
}

std::variant<CliquePartitionQuery, TrivialEquitable> equitable_params(int n, int k_colors) {
  if (n < 1 || k_colors < 1) throw Error("equitable_params needs n >= 1 and k_colors >= 1");
  if (k_colors >= n) return TrivialEquitable{};
  if (n % k_colors == 0) return CliquePartitionQuery{n / k_colors, k_colors};
  return CliquePartitionQuery{(n + k_colors - 1) / k_colors, n % k_colors};
}

template <class T>
SetFunction<T> clique_indicator(const Graph& g, int l, Vertex v, std::span<const Vertex> bag) {
  std::vector<Vertex> ground;
  for (Vertex u : bag) {
    if (u != v) ground.push_back(u);
  }
  const int m = static_cast<int>(ground.size());
  SetFunction<T> out(m);
  if (l < 1) return out;
  Mask near = 0;
  std::vector<Mask> adj(m, 0);
  for (int i = 0; i < m; ++i) {
    if (g.adjacent(v, ground[i])) near |= Mask{1} << i;
    for (int j = 0; j < m; ++j) {
      if (i != j && g.adjacent(ground[i], ground[j])) adj[i] |= Mask{1} << j;
    }
  }
  std::vector<char> clique(out.size(), 0);
  clique[0] = 1;
  for (std::size_t s = 1; s < out.size(); ++s) {
    const Mask a = static_cast<Mask>(s);
    const Mask rest = a & (a - 1);
    const int low = std::countr_zero(a);
    clique[s] = clique[rest] && (adj[low] & rest) == rest;
  }
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Mask a = static_cast<Mask>(s);
    if (std::popcount(a) == l - 1 && (a & ~near) == 0 && clique[s]) out[a] = T(1);
  }
  return out;
}

template SetFunction<Count> clique_indicator<Count>(const Graph&, int, Vertex, std::span<const Vertex>);
template SetFunction<ModNum> clique_indicator<ModNum>(const Graph&, int, Vertex, std::span<const Vertex>);

std::string witness_problem(const Graph& g, const CliquePartitionQuery& q, const PartitionWitness& w) {
  std::vector<int> owner(g.num_vertices(), -1);
  int large = 0;
  for (std::size_t i = 0; i < w.cliques.size(); ++i) {
    const auto& c = w.cliques[i];
    const int size = static_cast<int>(c.size());
    if (size != q.r && size != q.r - 1) return "clique " + std::to_string(i) + " has size " + std::to_string(size);
    large += size == q.r;
    for (Vertex v : c) {
      if (v < 0 || v >= g.num_vertices()) return "vertex out of range";
      if (owner[v] >= 0) return "vertex " + std::to_string(v) + " covered twice";
      owner[v] = static_cast<int>(i);
    }
    if (!g.is_clique(c)) return "set " + std::to_string(i) + " is not a clique";
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (owner[v] < 0) return "vertex " + std::to_string(v) + " uncovered";
  }
  if (large != q.k) return std::to_string(large) + " cliques of size r, expected " + std::to_string(q.k);
  return {};
}

template <class T>
CliquePartitionCounter<T>::CliquePartitionCounter(const Graph& g, const NiceTreeDecomposition& ntd,
                                                  CliquePartitionQuery q, CountOptions options, T unit)
    : g_(g), ntd_(ntd), q_(q), options_(options), unit_(std::move(unit)),
      shape_valid_(q.shape_valid(g.num_vertices())),
      tables_(ntd.nodes.size()) {
  if (q.r < 2) throw Error("clique partition queries need r >= 2");
  if (q.k < 0) throw Error("clique partition queries need k >= 0");
  for (const auto& node : ntd.nodes) {
    if (node.bag.size() > static_cast<std::size_t>(kMaxGroundSize)) throw Error("decomposition too wide for the table layout");
  }
  options_.threads = detail::resolve_threads(options.threads);
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::leaf() const {
  DpTable<T> t;
  t.by_k.assign(q_.k + 1, std::vector<T>(1));
  t.by_k[0][0] = unit_;
  return t;
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::introduce(int x, const DpTable<T>& child) const {
  const auto& node = ntd_.nodes[x];
  const int b = static_cast<int>(node.bag.size());
  const int pos = position_of(node.bag, node.vertex);
  DpTable<T> t;
  t.bag_size = b;
  t.by_k.assign(q_.k + 1, std::vector<T>(std::size_t{1} << b));
  for (int kk = 0; kk <= q_.k; ++kk) {
    const auto& from = child.by_k[kk];
    auto& to = t.by_k[kk];
    for (std::size_t s = 0; s < from.size(); ++s) to[insert_bit(static_cast<Mask>(s), pos, false)] = from[s];
  }
  return t;
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::forget(int x, const DpTable<T>& child) const {
  const auto& node = ntd_.nodes[x];
  const auto& child_bag = ntd_.nodes[node.children[0]].bag;
  const int m = static_cast<int>(node.bag.size());
  const int pos = position_of(child_bag, node.vertex);
  const std::size_t full = std::size_t{1} << m;

  DpTable<T> t;
  t.bag_size = m;
  t.by_k.assign(q_.k + 1, std::vector<T>(full));
  // v covered below this node, or v uncovered in the child and closed now
  // in a clique with bag vertices.
  std::vector<std::optional<RankedTransform<T>>> open(q_.k + 1);
  detail::parallel_for(q_.k + 1, options_.threads, [&](int kk) {
    SetFunction<T> uncovered(m);
    for (std::size_t s = 0; s < full; ++s) {
      t.by_k[kk][s] = child.by_k[kk][insert_bit(static_cast<Mask>(s), pos, true)];
      uncovered[static_cast<Mask>(s)] = child.by_k[kk][insert_bit(static_cast<Mask>(s), pos, false)];
    }
    open[kk].emplace(uncovered);
  });
  const RankedTransform<T> large(clique_indicator<T>(g_, q_.r, node.vertex, child_bag));
  const RankedTransform<T> small(clique_indicator<T>(g_, q_.r - 1, node.vertex, child_bag));
  detail::parallel_for(q_.k + 1, options_.threads, [&](int kk) {
    RankedAccumulator<T> acc(m);
    if (kk > 0) acc.add_product(*open[kk - 1], large);
    acc.add_product(*open[kk], small);
    auto closed = acc.finish();
    for (std::size_t s = 0; s < full; ++s) t.by_k[kk][s] += closed[static_cast<Mask>(s)];
  });
  return t;
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::join(int x, const DpTable<T>& left, const DpTable<T>& right) const {
  const int m = static_cast<int>(ntd_.nodes[x].bag.size());
  std::vector<std::optional<RankedTransform<T>>> ly(q_.k + 1), rz(q_.k + 1);
  detail::parallel_for(2 * (q_.k + 1), options_.threads, [&](int i) {
    const bool is_left = i <= q_.k;
    const int kk = is_left ? i : i - q_.k - 1;
    const auto& rows = is_left ? left.by_k[kk] : right.by_k[kk];
    (is_left ? ly : rz)[kk].emplace(SetFunction<T>(m, rows));
  });
  DpTable<T> t;
  t.bag_size = m;
  t.by_k.resize(q_.k + 1);
  detail::parallel_for(q_.k + 1, options_.threads, [&](int kk) {
    RankedAccumulator<T> acc(m);
    for (int ky = 0; ky <= kk; ++ky) acc.add_product(*ly[ky], *rz[kk - ky]);
    auto out = acc.finish();
    t.by_k[kk].assign(out.values().begin(), out.values().end());
  });
  return t;
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::compute_node(int x, const std::vector<const DpTable<T>*>& children) const {
  switch (ntd_.nodes[x].kind) {
    case NiceKind::kLeaf:
      return leaf();
    case NiceKind::kIntroduce:
      return introduce(x, *children[0]);
    case NiceKind::kForget:
      return forget(x, *children[0]);
    case NiceKind::kJoin:
      return join(x, *children[0], *children[1]);
  }
  throw CorruptTables("unknown node kind");
}

template <class T>
DpTable<T> CliquePartitionCounter<T>::compute_subtree(int x) const {
  std::vector<int> nodes{x};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int c : ntd_.nodes[nodes[i]].children) nodes.push_back(c);
  }
  std::sort(nodes.begin(), nodes.end());
  std::unordered_map<int, DpTable<T>> live;
  for (int y : nodes) {
    std::vector<const DpTable<T>*> kids;
    for (int c : ntd_.nodes[y].children) kids.push_back(&live.at(c));
    auto table = compute_node(y, kids);
    for (int c : ntd_.nodes[y].children) live.erase(c);
    live.emplace(y, std::move(table));
  }
  return std::move(live.at(x));
}

template <class T>
const T& CliquePartitionCounter<T>::count() {
  if (computed_) return root_count_;
  computed_ = true;
  if (!shape_valid_) return root_count_ = T(0);
  for (int x = 0; x < static_cast<int>(ntd_.nodes.size()); ++x) {
    const auto& node = ntd_.nodes[x];
    std::vector<const DpTable<T>*> kids;
    for (int c : node.children) kids.push_back(&tables_[c]);
    const auto start = std::chrono::steady_clock::now();
    tables_[x] = compute_node(x, kids);
    if (options_.stats) {
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      const int child_bag = node.children.empty() ? 0 : static_cast<int>(ntd_.nodes[node.children[0]].bag.size());
      options_.stats->push_back({x, node.kind, static_cast<int>(node.bag.size()), child_bag, took.count()});
    }
    if (!options_.keep_tables) {
      for (int c : node.children) tables_[c] = DpTable<T>{};
    }
  }
  root_count_ = tables_[ntd_.root].by_k[q_.k][0];
  return root_count_;
}

template <class T>
std::optional<PartitionWitness> CliquePartitionCounter<T>::recover() {
  if (is_zero(count())) return std::nullopt;
  PartitionWitness witness;
  struct Frame {
    int node;
    Mask covered;
    int k;
  };
  // Tables of nodes on the current descent; only used without retention.
  std::unordered_map<int, DpTable<T>> cache;
  auto table_of = [&](int x) -> const DpTable<T>& {
    if (options_.keep_tables) return tables_[x];
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, compute_subtree(x)).first;
    return it->second;
  };
  auto require = [](bool ok, const char* what) {
    if (!ok) throw CorruptTables(what);
  };
  if (!options_.keep_tables) cache.emplace(ntd_.root, std::move(tables_[ntd_.root]));

  std::vector<Frame> stack{{ntd_.root, 0, q_.k}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const auto& node = ntd_.nodes[f.node];
    require(!is_zero(table_of(f.node).at(f.covered, f.k)), "descent reached a zero entry");
    switch (node.kind) {
      case NiceKind::kLeaf:
        require(f.covered == 0 && f.k == 0, "leaf entry must be (empty, 0)");
        break;
      case NiceKind::kIntroduce: {
        const int pos = position_of(node.bag, node.vertex);
        require(!((f.covered >> pos) & 1), "introduced vertex marked covered");
        stack.push_back({node.children[0], remove_bit(f.covered, pos), f.k});
        break;
      }
      case NiceKind::kForget: {
        const int child = node.children[0];
        const auto& child_bag = ntd_.nodes[child].bag;
        const int pos = position_of(child_bag, node.vertex);
        const auto& below = table_of(child);
        const Mask already = insert_bit(f.covered, pos, true);
        if (!is_zero(below.at(already, f.k))) {
          stack.push_back({child, already, f.k});
          break;
        }
        const auto large = clique_indicator<T>(g_, q_.r, node.vertex, child_bag);
        const auto small = clique_indicator<T>(g_, q_.r - 1, node.vertex, child_bag);
        bool found = false;
        for (Mask a = f.covered;; a = (a - 1) & f.covered) {
          const Mask rest = insert_bit(f.covered ^ a, pos, false);
          int used = -1;
          if (f.k > 0 && !is_zero(large[a]) && !is_zero(below.at(rest, f.k - 1))) {
            used = f.k - 1;
          } else if (!is_zero(small[a]) && !is_zero(below.at(rest, f.k))) {
            used = f.k;
          }
          if (used >= 0) {
            std::vector<Vertex> clique{node.vertex};
            for (int i = 0; i < static_cast<int>(node.bag.size()); ++i) {
              if ((a >> i) & 1) clique.push_back(node.bag[i]);
            }
            std::sort(clique.begin(), clique.end());
            witness.cliques.push_back(std::move(clique));
            stack.push_back({child, rest, used});
            found = true;
            break;
          }
          if (a == 0) break;
        }
        require(found, "forget entry has no nonzero term");
        break;
      }
      case NiceKind::kJoin: {
        const auto& left = table_of(node.children[0]);
        const auto& right = table_of(node.children[1]);
        bool found = false;
        for (int ky = 0; ky <= f.k && !found; ++ky) {
          for (Mask a = f.covered;; a = (a - 1) & f.covered) {
            if (!is_zero(left.at(a, ky)) && !is_zero(right.at(f.covered ^ a, f.k - ky))) {
              stack.push_back({node.children[0], a, ky});
              stack.push_back({node.children[1], static_cast<Mask>(f.covered ^ a), f.k - ky});
              found = true;
              break;
            }
            if (a == 0) break;
          }
        }
        require(found, "join entry has no nonzero split");
        break;
      }
    }
    if (!options_.keep_tables) cache.erase(f.node);
  }
  if (!options_.keep_tables) tables_[ntd_.root] = DpTable<T>{};
  std::sort(witness.cliques.begin(), witness.cliques.end());
  return witness;
}

template class CliquePartitionCounter<Count>;
template class CliquePartitionCounter<ModNum>;

namespace {

void check_decomposition(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (auto problem = validate_nice(ntd); !problem.empty()) throw InvalidDecomposition(problem);
  if (auto report = validate_td(g, ntd.as_tree_decomposition()); !report.valid()) {
    throw InvalidDecomposition(report.message);
  }
}

}  // namespace

CountResult count_partitions(const Graph& g, const NiceTreeDecomposition& ntd, const CliquePartitionQuery& q,
                             bool want_witness, CountOptions options) {
  check_decomposition(g, ntd);
  options.keep_tables = options.keep_tables && want_witness;
  CliquePartitionCounter<Count> counter(g, ntd, q, options);
  CountResult result;
  result.count = counter.count();
  result.shape_valid = counter.shape_valid();
  result.width = ntd.width();
  if (want_witness) result.witness = counter.recover();
  return result;
}

ModularCountResult count_partitions_modular(const Graph& g, const NiceTreeDecomposition& ntd,
                                            const CliquePartitionQuery& q, std::uint64_t seed,
                                            bool want_witness, CountOptions options) {
  check_decomposition(g, ntd);
  ModularCountResult result;
  result.p1 = random_prime_62(seed);
  do {
    result.p2 = random_prime_62(seed ^ 0x9e3779b97f4a7c15ULL);
    seed += 1;
  } while (result.p2 == result.p1);
  result.width = ntd.width();
  result.shape_valid = q.shape_valid(g.num_vertices());

  // The leaf seed carries the modulus into every derived table entry.
  auto run = [&](std::uint64_t p) {
    CountOptions opts = options;
    opts.keep_tables = options.keep_tables && want_witness;
    CliquePartitionCounter<ModNum> counter(g, ntd, q, opts, ModNum(1, p));
    const std::uint64_t residue = counter.count().value();
    std::optional<PartitionWitness> witness;
    if (want_witness && residue != 0) witness = counter.recover();
    return std::make_pair(residue, std::move(witness));
  };
  auto [r1, w1] = run(result.p1);
  auto [r2, w2] = run(result.p2);
  result.r1 = r1;
  result.r2 = r2;
  // A nonzero residue proves a nonzero count; both vanishing means zero
  // unless the count is a multiple of p1 * p2.
  result.nonzero = r1 != 0 || r2 != 0;
  result.combined = crt_combine(r1, result.p1, r2, result.p2);
  if (want_witness) result.witness = w1 ? std::move(w1) : std::move(w2);
  return result;
}

std::optional<PartitionWitness> recover_partition(CliquePartitionCounter<Count>& counter) {
  return counter.recover();
}

ComplementColoringResult equitable_color_via_complement(const Graph& g, int k_colors) {
  if (k_colors < 1) throw Error("number of colors must be positive");
  const int n = g.num_vertices();
  ComplementColoringResult result;
  if (n == 0) {
    result.coloring = Coloring{k_colors, {}};
    result.partitions = 1;
    return result;
  }
  const auto params = equitable_params(n, k_colors);
  if (std::holds_alternative<TrivialEquitable>(params)) {
    Coloring c{k_colors, std::vector<int>(n)};
    for (Vertex v = 0; v < n; ++v) c.color[v] = v;
    result.coloring = std::move(c);
    result.partitions = 1;
    return result;
  }
  const auto q = std::get<CliquePartitionQuery>(params);
  const Graph co = complement(g);
  const auto ntd = make_nice(decompose_minfill(co));
  result.complement_width = ntd.width();
  CliquePartitionCounter<Count> counter(co, ntd, q);
  result.partitions = counter.count();
  auto witness = counter.recover();
  if (!witness) return result;
  Coloring c{k_colors, std::vector<int>(n, -1)};
  for (std::size_t i = 0; i < witness->cliques.size(); ++i) {
    for (Vertex v : witness->cliques[i]) c.color[v] = static_cast<int>(i);
  }
  result.coloring = std::move(c);
  return result;
}

}  // namespace equicolor
