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

#include "equicolor/chordal.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "equicolor/gadgets.hpp"
#include "equicolor/oracles.hpp"
#include "support.hpp"

namespace equicolor {
namespace {

// Each vertex's later neighbors form a clique.
bool is_peo(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.num_vertices()) return false;
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (pos[order[i]] >= 0) return false;
    pos[order[i]] = static_cast<int>(i);
  }
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    if (!g.is_clique(later)) return false;
  }
  return true;
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4 || std::set<Vertex>(cycle.begin(), cycle.end()).size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::set<std::vector<Vertex>> maximal_cliques_brute(const Graph& g) {
  const int n = g.num_vertices();
  std::set<std::vector<Vertex>> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) vs.push_back(v);
    }
    if (!g.is_clique(vs)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (s >> v & 1) continue;
      auto bigger = vs;
      bigger.push_back(v);
      maximal = !g.is_clique(bigger);
    }
    if (maximal) out.insert(vs);
  }
  return out;
}

void expect_valid_clique_tree(const Graph& g, const CliqueTree& ct) {
  EXPECT_EQ(std::set<std::vector<Vertex>>(ct.cliques.begin(), ct.cliques.end()), maximal_cliques_brute(g));
  EXPECT_LE(static_cast<int>(ct.cliques.size()), std::max(1, g.num_vertices()));
  EXPECT_TRUE(is_peo(g, ct.peo));
  TreeDecomposition td{g.num_vertices(), ct.cliques, ct.tree};
  EXPECT_TRUE(testing::td_ok_by_definition(g, td));
}

TEST(McsPeoTest, FourCycleIsNotChordal) {
  auto r = mcs_peo(cycle_graph(4));
  ASSERT_FALSE(r.chordal());
  EXPECT_EQ(r.hole.size(), 4u);
  EXPECT_TRUE(is_hole(cycle_graph(4), r.hole));
}

TEST(McsPeoTest, TreesAreChordal) {
  std::mt19937_64 rng(1);
  for (int n = 1; n < 30; ++n) {
    auto t = testing::random_tree(n, rng);
    auto r = mcs_peo(t);
    ASSERT_TRUE(r.chordal());
    EXPECT_TRUE(is_peo(t, r.peo));
  }
}

TEST(McsPeoTest, FlowerGadgetIsChordal) {
  auto r = mcs_peo(build_gadget(GadgetKind::kFlower, 2, 4));
  EXPECT_TRUE(r.chordal());
}

TEST(McsPeoTest, AgreesWithSimplicialEliminationOnAllSmallGraphs) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      auto r = mcs_peo(g);
      ASSERT_EQ(r.chordal(), brute_is_chordal(g));
      if (r.chordal()) {
        EXPECT_TRUE(is_peo(g, r.peo));
      } else {
        EXPECT_TRUE(is_hole(g, r.hole));
      }
    }
  }
}

TEST(McsPeoTest, AgreesWithSimplicialEliminationOnRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = testing::random_graph(8 + trial % 2, 0.2 + 0.6 * (trial % 5) / 5.0, rng);
    auto r = mcs_peo(g);
    ASSERT_EQ(r.chordal(), brute_is_chordal(g));
    if (!r.chordal()) EXPECT_TRUE(is_hole(g, r.hole));
  }
}

TEST(CliqueTreeTest, CompleteGraphIsOneClique) {
  auto ct = clique_tree(complete_graph(4));
  ASSERT_EQ(ct.cliques.size(), 1u);
  EXPECT_EQ(ct.cliques[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(ct.tree[0].empty());
}

TEST(CliqueTreeTest, PathOfThree) {
  auto ct = clique_tree(path_graph(3));
  ASSERT_EQ(ct.cliques.size(), 2u);
  EXPECT_EQ(std::set<std::vector<Vertex>>(ct.cliques.begin(), ct.cliques.end()),
            (std::set<std::vector<Vertex>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(ct.tree[0], (std::vector<int>{1}));
}

TEST(CliqueTreeTest, AntiflowerHasThreeMaximalCliques) {
  auto g = build_gadget(GadgetKind::kAntiflower, 2, 3);
  auto ct = clique_tree(g);
  EXPECT_EQ(ct.cliques.size(), 3u);
  expect_valid_clique_tree(g, ct);
}

TEST(CliqueTreeTest, RandomChordalGraphs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_chordal(1 + trial % 12, rng);
    ASSERT_TRUE(brute_is_chordal(g));
    expect_valid_clique_tree(g, clique_tree(g));
  }
}

TEST(CliqueTreeTest, DisconnectedInputStillGivesATree) {
  std::vector<Graph> parts{complete_graph(3), Graph(1), path_graph(3)};
  auto g = disjoint_union(parts).graph;
  expect_valid_clique_tree(g, clique_tree(g));
}

TEST(CliqueTreeTest, RejectsNonChordal) { EXPECT_THROW(clique_tree(cycle_graph(5)), NotChordalError); }

TEST(MaxCliqueTest, Examples) {
  EXPECT_EQ(max_clique_size(complete_graph(5)), 5);
  EXPECT_EQ(max_clique_size(build_gadget(GadgetKind::kTrem, 2, 3)), 3);
  EXPECT_EQ(max_clique_size(Graph(6)), 1);
  EXPECT_EQ(max_clique_size(Graph(0)), 0);
  EXPECT_THROW(max_clique_size(cycle_graph(4)), NotChordalError);
}

TEST(MaxCliqueTest, MatchesEnumerationOnChordalGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_chordal(1 + trial % 12, rng);
    EXPECT_EQ(max_clique_size(g), brute_clique_number(g));
  }
}

TEST(InducedStarTest, Examples) {
  EXPECT_EQ(max_induced_star(star_graph(3), 6), 3);
  EXPECT_EQ(max_induced_star(build_gadget(GadgetKind::kTrem, 2, 4), 6), 3);
  EXPECT_EQ(max_induced_star(complete_graph(4), 6), 1);
  EXPECT_EQ(max_induced_star(Graph(3), 6), 0);
  EXPECT_EQ(max_induced_star(star_graph(5), 4), 4);
}

TEST(FindClawTest, ClawAndClawFree) {
  auto star = star_graph(3);
  auto claw = find_claw(star, mcs_peo(star).peo);
  ASSERT_TRUE(claw.has_value());
  EXPECT_EQ((*claw)[0], 0);
  auto path = path_graph(5);
  EXPECT_FALSE(find_claw(path, mcs_peo(path).peo).has_value());
}

TEST(FindClawTest, AgreesWithBruteForceOnChordalGraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = testing::random_chordal(1 + trial % 12, rng);
    auto claw = find_claw(g, mcs_peo(g).peo);
    ASSERT_EQ(claw.has_value(), brute_has_claw(g));
    if (claw) {
      auto [c, a, b, d] = *claw;
      EXPECT_TRUE(g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d));
      EXPECT_FALSE(g.adjacent(a, b) || g.adjacent(a, d) || g.adjacent(b, d));
    }
  }
}

}  // namespace
}  // namespace equicolor
