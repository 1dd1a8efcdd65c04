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

#include "equicolor/gadgets.hpp"

#include <algorithm>
#include <numeric>

namespace equicolor {
namespace {

void check_gadget_params(int a, int k) {
  if (a < 1) throw Error("gadget parameter a must be at least 1, got " + std::to_string(a));
  if (k < 2) throw Error("gadget parameter k must be at least 2, got " + std::to_string(k));
}

std::string label_for(const VertexRole& r) {
  std::string head = r.gadget < 0 ? "center" : "item" + std::to_string(r.gadget);
  std::string s = head + "." + std::string(role_name(r.role)) + std::to_string(r.part);
  if (r.role != Role::kHub) s += "." + std::to_string(r.index);
  return s;
}

std::vector<std::string> labels_for(const std::vector<VertexRole>& roles) {
  std::vector<std::string> out;
  out.reserve(roles.size());
  for (const auto& r : roles) out.push_back(label_for(r));
  return out;
}

Graph trem_graph(int a, int k) {
  const int block = 2 * k - 1;
  auto hub = [&](int i) { return i * block; };
  auto member = [&](int i, int which, int j) { return i * block + 1 + which * (k - 1) + j; };
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    for (int which = 0; which < 2; ++which) {
      for (int j = 0; j < k - 1; ++j) {
        es.emplace_back(hub(i), member(i, which, j));
        for (int l = j + 1; l < k - 1; ++l) es.emplace_back(member(i, which, j), member(i, which, l));
      }
    }
    if (i + 1 < a) {
      for (int j = 0; j < k - 1; ++j) es.emplace_back(hub(i), member(i + 1, 0, j));
    }
  }
  return Graph(a * block, es);
}

void check_coloring(const ReductionInstance& ri, const Coloring& c) {
  if (c.k != ri.colors) {
    throw MalformedColoring("coloring uses " + std::to_string(c.k) + " colors, instance needs " +
                            std::to_string(ri.colors));
  }
  auto report = validate_coloring(ri.graph, c, true);
  if (!report.ok()) throw MalformedColoring("coloring is not proper and equitable: " + report.summary());
}

}  // namespace

long BinPackingInstance::total() const {
  return std::accumulate(items.begin(), items.end(), 0L);
}

BinPackingInstance normalize(const BinPackingInstance& inst) {
  if (inst.bins < 1 || inst.capacity < 1) throw Error("bins and capacity must be positive");
  for (int a : inst.items) {
    if (a < 1) throw Error("items must be positive");
  }
  const long room = static_cast<long>(inst.bins) * inst.capacity - inst.total();
  if (room < 0) {
    throw Overfull("items sum to " + std::to_string(inst.total()) + ", more than k*B = " +
                   std::to_string(static_cast<long>(inst.bins) * inst.capacity));
  }
  BinPackingInstance out = inst;
  out.items.insert(out.items.end(), room, 1);
  return out;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kHub:
      return "hub";
    case Role::kClique:
      return "clique";
    case Role::kPetal:
      return "petal";
  }
  return "?";
}

std::vector<VertexRole> gadget_roles(GadgetKind kind, int a, int k) {
  check_gadget_params(a, k);
  std::vector<VertexRole> roles;
  switch (kind) {
    case GadgetKind::kAntiflower:
      for (int j = 0; j < k - 1; ++j) roles.push_back({-1, Role::kClique, 0, j});
      for (int i = 0; i <= a; ++i) roles.push_back({-1, Role::kPetal, i, 0});
      break;
    case GadgetKind::kFlower:
      roles.push_back({-1, Role::kHub, 0, 0});
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j < k - 1; ++j) roles.push_back({-1, Role::kClique, i, j});
      }
      break;
    case GadgetKind::kTrem:
      for (int i = 0; i < a; ++i) {
        roles.push_back({-1, Role::kHub, i, 0});
        for (int which = 0; which < 2; ++which) {
          for (int j = 0; j < k - 1; ++j) roles.push_back({-1, Role::kClique, 2 * i + which, j});
        }
      }
      break;
  }
  return roles;
}

Graph build_gadget(GadgetKind kind, int a, int k) {
  check_gadget_params(a, k);
  Graph g;
  switch (kind) {
    case GadgetKind::kAntiflower:
      g = join(complete_graph(k - 1), Graph(a + 1));
      break;
    case GadgetKind::kFlower: {
      std::vector<Graph> petals(a + 1, complete_graph(k - 1));
      g = join(Graph(1), disjoint_union(petals).graph);
      break;
    }
    case GadgetKind::kTrem:
      g = trem_graph(a, k);
      break;
  }
  return g.with_labels(labels_for(gadget_roles(kind, a, k)));
}

std::string_view reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kSplitUnion:
      return "split-union";
    case ReductionKind::kBlock:
      return "block";
    case ReductionKind::kInterval:
      return "interval";
  }
  return "?";
}

ReductionKind parse_reduction_kind(std::string_view name) {
  for (auto kind : {ReductionKind::kSplitUnion, ReductionKind::kBlock, ReductionKind::kInterval}) {
    if (reduction_name(kind) == name) return kind;
  }
  throw Error("unknown reduction kind '" + std::string(name) + "'");
}

ReductionInstance build_reduction(ReductionKind kind, const BinPackingInstance& inst) {
  if (inst.bins < 1 || inst.capacity < 1) throw Error("bins and capacity must be positive");
  if (!inst.exact()) {
    throw NotNormalized("items sum to " + std::to_string(inst.total()) + ", expected k*B = " +
                        std::to_string(static_cast<long>(inst.bins) * inst.capacity));
  }
  const int k = inst.bins;
  ReductionInstance ri;
  ri.kind = kind;
  ri.packing = inst;
  std::vector<Graph> parts;
  auto add_part = [&](GadgetKind gk, int a, int kk, int gadget) {
    parts.push_back(build_gadget(gk, a, kk));
    for (auto r : gadget_roles(gk, a, kk)) {
      r.gadget = gadget;
      ri.roles.push_back(r);
    }
  };
  switch (kind) {
    case ReductionKind::kSplitUnion:
      ri.colors = k;
      for (std::size_t j = 0; j < inst.items.size(); ++j) add_part(GadgetKind::kAntiflower, inst.items[j], k, static_cast<int>(j));
      break;
    case ReductionKind::kBlock:
      ri.colors = k + 1;
      add_part(GadgetKind::kFlower, inst.capacity, k + 1, -1);
      for (std::size_t j = 0; j < inst.items.size(); ++j) add_part(GadgetKind::kFlower, inst.items[j], k + 1, static_cast<int>(j));
      break;
    case ReductionKind::kInterval:
      ri.colors = k;
      for (std::size_t j = 0; j < inst.items.size(); ++j) add_part(GadgetKind::kTrem, inst.items[j], k, static_cast<int>(j));
      break;
  }
  auto joined = disjoint_union(parts);
  if (kind == ReductionKind::kBlock) {
    // Hub of the central flower is vertex 0; item hubs start their blocks.
    std::vector<Edge> es = joined.graph.edges();
    for (std::size_t j = 1; j < joined.offsets.size(); ++j) es.emplace_back(0, joined.offsets[j]);
    ri.graph = Graph(joined.graph.num_vertices(), es);
  } else {
    ri.graph = joined.graph;
  }
  ri.graph = ri.graph.with_labels(labels_for(ri.roles));
  return ri;
}

std::vector<int> decode_packing(const ReductionInstance& ri, const Coloring& c) {
  check_coloring(ri, c);
  const int k = ri.packing.bins;
  const int items = static_cast<int>(ri.packing.items.size());
  std::vector<int> bin(items, -1);
  switch (ri.kind) {
    case ReductionKind::kSplitUnion: {
      // The bin is the one color missing from C_j; the petals must all
      // carry it.
      std::vector<std::vector<char>> seen(items, std::vector<char>(k, 0));
      for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
        const auto& r = ri.roles[v];
        if (r.role == Role::kClique) seen[r.gadget][c.color[v]] = 1;
      }
      for (int j = 0; j < items; ++j) {
        for (int col = 0; col < k; ++col) {
          if (!seen[j][col]) bin[j] = col;
        }
      }
      for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
        const auto& r = ri.roles[v];
        if (r.role == Role::kPetal && c.color[v] != bin[r.gadget]) {
          throw MalformedColoring("petals of item " + std::to_string(r.gadget) + " are not monochromatic");
        }
      }
      break;
    }
    case ReductionKind::kBlock: {
      const int center = c.color[0];
      for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
        const auto& r = ri.roles[v];
        if (r.gadget < 0 || r.role != Role::kHub) continue;
        const int col = c.color[v];
        bin[r.gadget] = col < center ? col : col - 1;
      }
      break;
    }
    case ReductionKind::kInterval: {
      for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
        const auto& r = ri.roles[v];
        if (r.role != Role::kHub) continue;
        if (bin[r.gadget] >= 0 && bin[r.gadget] != c.color[v]) {
          throw MalformedColoring("hubs of item " + std::to_string(r.gadget) + " are not monochromatic");
        }
        bin[r.gadget] = c.color[v];
      }
      break;
    }
  }
  std::vector<long> load(k, 0);
  for (int j = 0; j < items; ++j) {
    if (bin[j] < 0) throw MalformedColoring("item " + std::to_string(j) + " has no bin");
    load[bin[j]] += ri.packing.items[j];
  }
  for (int b = 0; b < k; ++b) {
    if (load[b] != ri.packing.capacity) {
      throw MalformedColoring("bin " + std::to_string(b) + " holds " + std::to_string(load[b]) + ", expected " +
                              std::to_string(ri.packing.capacity));
    }
  }
  return bin;
}

nlohmann::json reduction_sidecar(const ReductionInstance& ri) {
  nlohmann::json roles = nlohmann::json::array();
  for (const auto& r : ri.roles) {
    roles.push_back({{"gadget", r.gadget}, {"role", role_name(r.role)}, {"part", r.part}, {"index", r.index}});
  }
  return {{"schema", kSidecarSchema},
          {"kind", reduction_name(ri.kind)},
          {"items", ri.packing.items},
          {"k", ri.packing.bins},
          {"B", ri.packing.capacity},
          {"colors", ri.colors},
          {"vertices", ri.graph.num_vertices()},
          {"roles", std::move(roles)}};
}

ReductionInstance reduction_from_sidecar(const nlohmann::json& sidecar) {
  BinPackingInstance inst;
  ReductionKind kind;
  try {
    kind = parse_reduction_kind(sidecar.at("kind").get<std::string>());
    inst.items = sidecar.at("items").get<std::vector<int>>();
    inst.bins = sidecar.at("k").get<int>();
    inst.capacity = sidecar.at("B").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed reduction sidecar: ") + e.what());
  }
  auto ri = build_reduction(kind, inst);
  if (sidecar.contains("roles")) {
    const auto& roles = sidecar["roles"];
    bool same = roles.size() == ri.roles.size();
    for (std::size_t v = 0; same && v < roles.size(); ++v) {
      const auto& r = ri.roles[v];
      same = roles[v].value("gadget", -2) == r.gadget && roles[v].value("role", "") == role_name(r.role) &&
             roles[v].value("part", -1) == r.part && roles[v].value("index", -1) == r.index;
    }
    if (!same) throw ParseError(0, "sidecar roles do not match the rebuilt instance");
  }
  return ri;
}

}  // namespace equicolor
