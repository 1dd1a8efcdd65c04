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

#include "equicolor/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "equicolor/chordal.hpp"
#include "equicolor/clawfree.hpp"
#include "equicolor/clique_partition.hpp"
#include "equicolor/gadgets.hpp"
#include "equicolor/graph_io.hpp"
#include "equicolor/treedecomp.hpp"

namespace equicolor {
namespace {

using nlohmann::json;

class MissingInput : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_dimacs(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

json one_based(std::span<const Vertex> vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

json sizes_of(const Coloring& c) { return c.class_sizes(); }

struct Options {
  std::string graph;
  int k = 0;
  int r = 0;
  int colors = 0;
  std::string td;
  bool witness = false;
  bool modular = false;
  std::uint64_t seed = 1;
  std::string kind;
  std::string items;
  int bins = 0;
  int capacity = 0;
  std::string out_dir;
  std::string name;
  std::string coloring;
  bool equitable = false;
};

int cmd_color_clawfree(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  try {
    auto result = equitable_color_clawfree(g, o.k);
    if (auto* inf = std::get_if<Infeasible>(&result)) {
      out << json{{"schema", "equicolor.infeasible/1"}, {"k", o.k}, {"omega", inf->omega}}.dump() << '\n';
      err << "infeasible: omega=" << inf->omega << " exceeds k=" << o.k << '\n';
      return kExitNegative;
    }
    const auto& c = std::get<Coloring>(result);
    json j = coloring_to_json(c);
    j["sizes"] = sizes_of(c);
    out << j.dump() << '\n';
    return kExitOk;
  } catch (const NotChordalError& e) {
    out << json{{"schema", "equicolor.not-chordal/1"}, {"hole", one_based(e.hole())}}.dump() << '\n';
    err << "graph is not chordal; chordless cycle " << one_based(e.hole()).dump() << '\n';
    return kExitWrongClass;
  } catch (const NotClawFreeError& e) {
    out << json{{"schema", "equicolor.not-claw-free/1"}, {"claw", one_based(e.claw())}}.dump() << '\n';
    err << "graph is not claw-free; claw " << one_based(e.claw()).dump() << " (center first)\n";
    return kExitWrongClass;
  }
}

json witness_json(const std::optional<PartitionWitness>& w) {
  if (!w) return nullptr;
  json a = json::array();
  for (const auto& c : w->cliques) a.push_back(one_based(c));
  return a;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  CliquePartitionQuery q{o.r, o.k};
  if (o.colors > 0) {
    auto params = equitable_params(g.num_vertices(), o.colors);
    if (std::holds_alternative<TrivialEquitable>(params)) {
      err << "every class has at most one vertex; there is nothing to count\n";
      return kExitUsage;
    }
    q = std::get<CliquePartitionQuery>(params);
  }
  if (q.r < 2 || q.k < 0) {
    err << "need -r >= 2 and -k >= 0, or --colors\n";
    return kExitUsage;
  }
  if (!q.shape_valid(g.num_vertices())) {
    err << "shape r=" << q.r << " k=" << q.k << " does not fit " << g.num_vertices() << " vertices\n";
    return kExitUsage;
  }
  TreeDecomposition td;
  if (!o.td.empty()) {
    td = parse_td(read_text(o.td));
    auto report = validate_td(g, td);
    if (!report.valid()) {
      err << "invalid tree decomposition: " << report.message << '\n';
      return kExitDataError;
    }
  } else {
    td = decompose_minfill(g);
  }
  const auto ntd = make_nice(td);
  json j{{"schema", "equicolor.count/1"}, {"r", q.r}, {"k", q.k}};
  if (o.modular) {
    auto res = count_partitions_modular(g, ntd, q, o.seed, o.witness);
    j["mode"] = "modular";
    j["primes"] = {std::to_string(res.p1), std::to_string(res.p2)};
    j["residues"] = {std::to_string(res.r1), std::to_string(res.r2)};
    j["count_mod_p1p2"] = res.combined.str();
    j["nonzero"] = res.nonzero;
    j["width"] = res.width;
    if (o.witness) j["witness"] = witness_json(res.witness);
  } else {
    auto res = count_partitions(g, ntd, q, o.witness);
    j["mode"] = "exact";
    j["count"] = res.count.str();
    j["width"] = res.width;
    if (o.witness) j["witness"] = witness_json(res.witness);
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_equitable(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  if (o.k < 1) {
    err << "need -k >= 1\n";
    return kExitUsage;
  }
  auto res = equitable_color_via_complement(g, o.k);
  if (!res.coloring) {
    out << json{{"schema", "equicolor.infeasible/1"}, {"k", o.k}, {"partitions", res.partitions.str()},
                {"complement_width", res.complement_width}}
               .dump()
        << '\n';
    err << "infeasible: no equitable " << o.k << "-coloring\n";
    return kExitNegative;
  }
  json j = coloring_to_json(*res.coloring);
  j["sizes"] = sizes_of(*res.coloring);
  j["partitions"] = res.partitions.str();
  j["complement_width"] = res.complement_width;
  out << j.dump() << '\n';
  return kExitOk;
}

std::vector<int> parse_items(const std::string& csv) {
  std::vector<int> items;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(0, "bad item '" + tok + "'");
    items.push_back(v);
  }
  if (items.empty()) throw ParseError(0, "no items given");
  return items;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream&) {
  BinPackingInstance inst{parse_items(o.items), o.bins, o.capacity};
  const auto kind = parse_reduction_kind(o.kind);
  const auto ri = build_reduction(kind, normalize(inst));
  namespace fs = std::filesystem;
  fs::create_directories(o.out_dir);
  const std::string stem = o.name.empty() ? std::string(reduction_name(kind)) : o.name;
  const fs::path graph_path = fs::path(o.out_dir) / (stem + ".col");
  const fs::path sidecar_path = fs::path(o.out_dir) / (stem + ".json");
  {
    std::ofstream f(graph_path);
    f << "c " << reduction_name(kind) << " instance, " << ri.colors << " colors\n" << to_dimacs(ri.graph);
    if (!f) throw Error("cannot write " + graph_path.string());
  }
  {
    std::ofstream f(sidecar_path);
    f << reduction_sidecar(ri).dump(1) << '\n';
    if (!f) throw Error("cannot write " + sidecar_path.string());
  }
  out << json{{"schema", "equicolor.gen/1"},
              {"kind", reduction_name(kind)},
              {"graph", graph_path.string()},
              {"sidecar", sidecar_path.string()},
              {"vertices", ri.graph.num_vertices()},
              {"edges", ri.graph.num_edges()},
              {"colors", ri.colors},
              {"items", ri.packing.items}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  json cj;
  try {
    cj = json::parse(read_text(o.coloring));
  } catch (const json::parse_error& e) {
    throw ParseError(0, o.coloring + ": " + e.what());
  }
  const Coloring c = coloring_from_json(cj, g.num_vertices());
  const auto report = validate_coloring(g, c, o.equitable);
  json mono = json::array();
  for (auto [u, v] : report.monochromatic_edges) mono.push_back({u + 1, v + 1});
  out << json{{"schema", "equicolor.report/1"},
              {"ok", report.ok()},
              {"total", report.total},
              {"proper", report.proper},
              {"equitable_checked", report.equitable_checked},
              {"equitable", report.equitable},
              {"unassigned", one_based(report.unassigned)},
              {"monochromatic_edges", mono},
              {"unbalanced_classes", report.unbalanced_classes},
              {"sizes", c.class_sizes()}}
             .dump()
      << '\n';
  if (!report.ok()) {
    err << report.summary() << '\n';
    return kExitNegative;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable coloring of structured graphs", "equicolor"};
  app.require_subcommand(1);
  Options o;

  auto* clawfree = app.add_subcommand("color-clawfree", "Equitable coloring of a claw-free chordal graph");
  clawfree->add_option("graph", o.graph, "DIMACS graph file, - for stdin")->required();
  clawfree->add_option("-k", o.k, "Number of colors")->required()->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Count partitions into k r-cliques and (r-1)-cliques");
  count->add_option("graph", o.graph, "DIMACS graph file, - for stdin")->required();
  auto* kopt = count->add_option("-k", o.k, "Number of r-cliques")->check(CLI::NonNegativeNumber);
  auto* ropt = count->add_option("-r", o.r, "Large clique size")->check(CLI::Range(2, 1 << 20));
  auto* copt = count->add_option("--colors", o.colors,
                                 "Derive r and k from an equitable coloring with this many colors")
                   ->check(CLI::PositiveNumber);
  copt->excludes(kopt)->excludes(ropt);
  ropt->needs(kopt);
  kopt->needs(ropt);
  count->add_option("--td", o.td, "Tree decomposition in PACE .td format");
  count->add_flag("--witness", o.witness, "Also return one partition");
  count->add_flag("--modular", o.modular, "Count modulo two random 62-bit primes");
  count->add_option("--seed", o.seed, "Seed for the modular primes");

  auto* equitable = app.add_subcommand("equitable", "Equitable coloring through the complement's clique partitions");
  equitable->add_option("graph", o.graph, "DIMACS graph file, - for stdin")->required();
  equitable->add_option("-k", o.k, "Number of colors")->required()->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a bin-packing reduction instance");
  gen->add_option("--kind", o.kind, "split-union, block or interval")
      ->required()
      ->check(CLI::IsMember({"split-union", "block", "interval"}));
  gen->add_option("--items", o.items, "Comma-separated item sizes")->required();
  gen->add_option("-k", o.bins, "Number of bins")->required()->check(CLI::PositiveNumber);
  gen->add_option("-B", o.capacity, "Bin capacity")->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out_dir, "Output directory")->required();
  gen->add_option("--name", o.name, "File stem (default: the kind)");

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", o.graph, "DIMACS graph file, - for stdin")->required();
  verify->add_option("--coloring", o.coloring, "Coloring JSON")->required();
  verify->add_flag("--equitable", o.equitable, "Also require balanced classes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*clawfree) return cmd_color_clawfree(o, out, err);
    if (*count) {
      if (o.colors == 0 && (kopt->count() == 0 || ropt->count() == 0)) {
        err << "count needs -k and -r, or --colors\n";
        return kExitUsage;
      }
      return cmd_count(o, out, err);
    }
    if (*equitable) return cmd_equitable(o, out, err);
    if (*gen) return cmd_gen(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const MissingInput& e) {
    err << e.what() << '\n';
    return kExitNoInput;
  } catch (const RecoloringNotFound& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitSoftware;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitDataError;
  } catch (const InvalidDecomposition& e) {
    err << "invalid tree decomposition: " << e.what() << '\n';
    return kExitDataError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitSoftware;
  }
  return kExitUsage;
}

}  // namespace equicolor
