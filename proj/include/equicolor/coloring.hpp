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

#include <string>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Assignment of one of `k` colors (0..k-1) to every vertex.
struct Coloring {
  int k = 0;
  /// color[v] for each vertex; -1 marks an unassigned vertex in colorings
  /// read from untrusted input.
  std::vector<int> color;

  std::vector<int> class_sizes() const;
  std::vector<std::vector<Vertex>> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringReport {
  bool total = true;
  bool proper = true;
  bool equitable_checked = false;
  bool equitable = true;
  /// Vertices with no color or a color outside 0..k-1.
  std::vector<Vertex> unassigned;
  std::vector<Edge> monochromatic_edges;
  /// Colors whose class size falls outside {floor(n/k), ceil(n/k)}.
  std::vector<int> unbalanced_classes;

  bool ok() const { return total && proper && (!equitable_checked || equitable); }
  /// One-line description; vertices are 1-based as in the file formats.
  std::string summary() const;
};

/// Checks properness and, when `require_equitable` is set, that every class
/// has floor(n/k) or ceil(n/k) vertices. Never throws on bad colorings; all
/// violations are listed in the report.
ColoringReport validate_coloring(const Graph& g, const Coloring& c, bool require_equitable);

}  // namespace equicolor
