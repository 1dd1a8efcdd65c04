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

#include "equicolor/coloring.hpp"

#include <sstream>

namespace equicolor {

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> sizes(k, 0);
  for (int c : color) {
    if (c >= 0 && c < k) ++sizes[c];
  }
  return sizes;
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(k);
  for (Vertex v = 0; v < static_cast<Vertex>(color.size()); ++v) {
    if (color[v] >= 0 && color[v] < k) out[color[v]].push_back(v);
  }
  return out;
}

ColoringReport validate_coloring(const Graph& g, const Coloring& c, bool require_equitable) {
  ColoringReport report;
  const int n = g.num_vertices();
  auto color_of = [&](Vertex v) {
    return v < static_cast<Vertex>(c.color.size()) ? c.color[v] : -1;
  };
  for (Vertex v = 0; v < n; ++v) {
    const int col = color_of(v);
    if (col < 0 || col >= c.k) report.unassigned.push_back(v);
  }
  report.total = report.unassigned.empty() && static_cast<int>(c.color.size()) == n;
  for (auto [u, v] : g.edges()) {
    const int cu = color_of(u);
    if (cu >= 0 && cu < c.k && cu == color_of(v)) report.monochromatic_edges.emplace_back(u, v);
  }
  report.proper = report.monochromatic_edges.empty();
  if (require_equitable) {
    report.equitable_checked = true;
    if (c.k <= 0) {
      report.equitable = n == 0;
    } else {
      const int lo = n / c.k;
      const int hi = (n + c.k - 1) / c.k;
      const auto sizes = c.class_sizes();
      for (int i = 0; i < c.k; ++i) {
        if (sizes[i] < lo || sizes[i] > hi) report.unbalanced_classes.push_back(i);
      }
      report.equitable = report.unbalanced_classes.empty() && report.total;
    }
  }
  return report;
}

std::string ColoringReport::summary() const {
  std::ostringstream out;
  out << (proper ? "proper" : "improper");
  if (equitable_checked) out << (equitable ? ", equitable" : ", not equitable");
  if (!total) out << ", " << unassigned.size() << " unassigned vertices";
  if (!monochromatic_edges.empty()) {
    out << ", monochromatic edges:";
    for (auto [u, v] : monochromatic_edges) out << " (" << u + 1 << "," << v + 1 << ")";
  }
  if (!unbalanced_classes.empty()) {
    out << ", unbalanced classes:";
    for (int c : unbalanced_classes) out << ' ' << c;
  }
  return out.str();
}

}  // namespace equicolor
