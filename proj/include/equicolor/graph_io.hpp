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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Parses DIMACS .col text ("p edge n m" header, "e u v" lines with 1-based
/// endpoints, "c" comments). Duplicate edges are merged. Throws ParseError
/// naming the offending line.
Graph parse_dimacs(std::string_view text);
Graph read_dimacs(std::istream& in);

/// Writes "p edge n m" followed by one "e u v" line per edge, u < v,
/// 1-based, in lexicographic order.
std::string to_dimacs(const Graph& g);

inline constexpr std::string_view kColoringSchema = "equicolor.coloring/1";

/// {"schema", "k", "classes": [[v, ...], ...]} with 1-based vertex ids.
nlohmann::json coloring_to_json(const Coloring& c);

/// Inverse of coloring_to_json for a graph on `n` vertices. Vertices absent
/// from every class stay unassigned (-1); a vertex listed twice, or an id
/// outside 1..n, raises ParseError.
Coloring coloring_from_json(const nlohmann::json& j, int n);

}  // namespace equicolor
