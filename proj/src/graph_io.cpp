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

#include "equicolor/graph_io.hpp"

#include <istream>
#include <iterator>
#include <optional>
#include <sstream>

#include "equicolor/error.hpp"

namespace equicolor {
namespace {

long parse_int(std::istringstream& fields, int line, const char* what) {
  long value = 0;
  if (!(fields >> value)) throw ParseError(line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& fields, int line) {
  std::string extra;
  if (fields >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<int> n;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n) throw ParseError(lineno, "duplicate problem line");
      std::string format;
      fields >> format;
      if (format != "edge" && format != "col") {
        throw ParseError(lineno, "unsupported problem format '" + format + "'");
      }
      const long nv = parse_int(fields, lineno, "vertex count");
      const long ne = parse_int(fields, lineno, "edge count");
      expect_end(fields, lineno);
      if (nv < 0 || ne < 0) throw ParseError(lineno, "negative count in problem line");
      n = static_cast<int>(nv);
    } else if (tag == "e") {
      if (!n) throw ParseError(lineno, "edge before problem line");
      const long u = parse_int(fields, lineno, "edge endpoint");
      const long v = parse_int(fields, lineno, "edge endpoint");
      expect_end(fields, lineno);
      for (long x : {u, v}) {
        if (x < 1 || x > *n) throw ParseError(lineno, "vertex " + std::to_string(x) + " out of range");
      }
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!n) throw ParseError(0, "missing problem line");
  return Graph(*n, edges);
}

Graph read_dimacs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_dimacs(text);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

nlohmann::json coloring_to_json(const Coloring& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes()) {
    nlohmann::json members = nlohmann::json::array();
    for (Vertex v : cls) members.push_back(v + 1);
    classes.push_back(std::move(members));
  }
  return {{"schema", kColoringSchema}, {"k", c.k}, {"classes", std::move(classes)}};
}

Coloring coloring_from_json(const nlohmann::json& j, int n) {
  if (!j.is_object() || !j.contains("k") || !j.contains("classes")) {
    throw ParseError(0, "coloring JSON needs \"k\" and \"classes\"");
  }
  if (!j["k"].is_number_integer() || !j["classes"].is_array()) {
    throw ParseError(0, "coloring JSON has mistyped \"k\" or \"classes\"");
  }
  Coloring c;
  c.k = j["k"].get<int>();
  if (c.k < 0) throw ParseError(0, "negative color count");
  const auto& classes = j["classes"];
  if (static_cast<int>(classes.size()) > c.k) {
    throw ParseError(0, "more classes than colors");
  }
  c.color.assign(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!classes[i].is_array()) throw ParseError(0, "class " + std::to_string(i) + " is not an array");
    for (const auto& item : classes[i]) {
      if (!item.is_number_integer()) throw ParseError(0, "non-integer vertex id");
      const long v = item.get<long>();
      if (v < 1 || v > n) throw ParseError(0, "vertex " + std::to_string(v) + " out of range");
      if (c.color[v - 1] != -1) throw ParseError(0, "vertex " + std::to_string(v) + " listed twice");
      c.color[v - 1] = static_cast<int>(i);
    }
  }
  return c;
}

}  // namespace equicolor
