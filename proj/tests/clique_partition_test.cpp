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

#include <random>

#include "gtest/gtest.h"

#include "equicolor/oracles.hpp"
#include "support.hpp"

namespace equicolor {
namespace {

NiceTreeDecomposition nice_of(const Graph& g) { return make_nice(decompose_minfill(g)); }

Count count_of(const Graph& g, int r, int k) { return count_partitions(g, nice_of(g), {r, k}).count; }

void expect_matches_brute(const Graph& g) {
  const int n = g.num_vertices();
  const auto ntd = nice_of(g);
  for (int r = 2; r <= 4; ++r) {
    for (int k = 0; r * k <= n; ++k) {
      CliquePartitionQuery q{r, k};
      if (!q.shape_valid(n)) continue;
      auto res = count_partitions(g, ntd, q, true);
      ASSERT_EQ(res.count, brute_count_partitions(g, q)) << "r=" << r << " k=" << k;
      ASSERT_EQ(res.witness.has_value(), res.count != 0);
      if (res.witness) EXPECT_EQ(witness_problem(g, q, *res.witness), "");
    }
  }
}

TEST(EquitableParamsTest, Examples) {
  auto q = std::get<CliquePartitionQuery>(equitable_params(5, 3));
  EXPECT_EQ(q.r, 2);
  EXPECT_EQ(q.k, 2);
  q = std::get<CliquePartitionQuery>(equitable_params(7, 3));
  EXPECT_EQ(q.r, 3);
  EXPECT_EQ(q.k, 1);
  q = std::get<CliquePartitionQuery>(equitable_params(6, 3));
  EXPECT_EQ(q.r, 2);
  EXPECT_EQ(q.k, 3);
  EXPECT_EQ(q.small_cliques(6), 0);
  EXPECT_TRUE(std::holds_alternative<TrivialEquitable>(equitable_params(4, 4)));
  EXPECT_TRUE(std::holds_alternative<TrivialEquitable>(equitable_params(3, 5)));
  EXPECT_THROW(equitable_params(0, 1), Error);
}

TEST(EquitableParamsTest, ShapeCoversEveryVertex) {
  for (int n = 1; n <= 40; ++n) {
    for (int kc = 1; kc < n; ++kc) {
      auto q = std::get<CliquePartitionQuery>(equitable_params(n, kc));
      ASSERT_TRUE(q.shape_valid(n));
      EXPECT_EQ(q.r * q.k + (q.r - 1) * (kc - q.k), n);
    }
  }
}

TEST(CliqueIndicatorTest, Examples) {
  auto g = complete_graph(3);
  std::vector<Vertex> bag{0, 1, 2};
  auto one = clique_indicator<Count>(g, 1, 2, bag);
  EXPECT_EQ(one.ground_size(), 2);
  EXPECT_EQ(one, SetFunction<Count>(2, {1, 0, 0, 0}));
  EXPECT_EQ(clique_indicator<Count>(g, 3, 2, bag), SetFunction<Count>(2, {0, 0, 0, 1}));
  EXPECT_EQ(clique_indicator<Count>(g, 2, 2, bag), SetFunction<Count>(2, {0, 1, 1, 0}));
  Graph isolated(3);
  EXPECT_EQ(clique_indicator<Count>(isolated, 2, 0, bag), SetFunction<Count>(2));
}

TEST(CliqueIndicatorTest, AgreesWithDirectEnumerationAndIsExclusive) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    auto g = testing::random_graph(n, 0.6, rng);
    std::vector<Vertex> bag(n);
    std::iota(bag.begin(), bag.end(), 0);
    const Vertex v = static_cast<Vertex>(rng() % n);
    std::vector<Vertex> rest;
    for (Vertex u : bag) {
      if (u != v) rest.push_back(u);
    }
    for (int r = 2; r <= 4; ++r) {
      auto big = clique_indicator<Count>(g, r, v, bag);
      auto small = clique_indicator<Count>(g, r - 1, v, bag);
      for (Mask a = 0; a < big.size(); ++a) {
        std::vector<Vertex> with_v{v};
        for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
          if (a >> i & 1) with_v.push_back(rest[i]);
        }
        const bool want = static_cast<int>(with_v.size()) == r && g.is_clique(with_v);
        EXPECT_EQ(big[a], Count(want ? 1 : 0));
        EXPECT_EQ(big[a] * small[a], 0);
      }
    }
  }
}

TEST(CountPartitionsTest, Examples) {
  EXPECT_EQ(count_of(complete_graph(3), 3, 1), 1);
  EXPECT_EQ(count_of(complete_graph(4), 3, 0), 3);
  EXPECT_EQ(count_of(path_graph(3), 2, 1), 2);
  EXPECT_EQ(count_of(complement(cycle_graph(5)), 2, 2), 5);
  EXPECT_EQ(count_of(complete_graph(6), 2, 3), 15);
  EXPECT_EQ(count_of(Graph(0), 2, 0), 1);
}

TEST(CountPartitionsTest, InvalidShapeCountsZero) {
  auto g = complete_graph(4);
  auto res = count_partitions(g, nice_of(g), {3, 2});
  EXPECT_FALSE(res.shape_valid);
  EXPECT_EQ(res.count, 0);
  EXPECT_THROW(count_partitions(g, nice_of(g), {1, 0}), Error);
}

TEST(CountPartitionsTest, WrongDecompositionIsRejected) {
  auto g = path_graph(4);
  auto other = nice_of(Graph(4));
  EXPECT_THROW(count_partitions(g, other, {2, 2}), InvalidDecomposition);
  auto broken = nice_of(g);
  broken.nodes[broken.root].bag.push_back(0);
  EXPECT_THROW(count_partitions(g, broken, {2, 2}), InvalidDecomposition);
}

TEST(CountPartitionsTest, MatchesBruteForceOnAllSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : testing::all_graphs(n)) expect_matches_brute(g);
  }
}

TEST(CountPartitionsTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) expect_matches_brute(testing::random_graph(8, 0.5 + 0.1 * (trial % 4), rng));
}

TEST(CountPartitionsTest, ArbitraryDecompositionsGiveTheSameCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    auto g = testing::random_graph(n, 0.6, rng);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto ntd = make_nice(decompose_from_ordering(g, order));
    for (int k = 0; 3 * k <= n; ++k) {
      CliquePartitionQuery q{3, k};
      if (!q.shape_valid(n)) continue;
      EXPECT_EQ(count_partitions(g, ntd, q).count, brute_count_partitions(g, q));
    }
  }
}

TEST(CountPartitionsTest, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(4);
  auto g = testing::random_graph(14, 0.7, rng);
  auto ntd = nice_of(g);
  CountOptions one;
  one.threads = 1;
  CountOptions four;
  four.threads = 4;
  EXPECT_EQ(count_partitions(g, ntd, {3, 2}, false, one).count, count_partitions(g, ntd, {3, 2}, false, four).count);
}

TEST(CountPartitionsTest, StatsCoverEveryNode) {
  auto g = complete_graph(5);
  auto ntd = nice_of(g);
  std::vector<NodeStat> stats;
  CountOptions opt;
  opt.stats = &stats;
  count_partitions(g, ntd, {3, 1}, false, opt);
  ASSERT_EQ(stats.size(), ntd.nodes.size());
  for (const auto& s : stats) {
    EXPECT_EQ(s.kind, ntd.nodes[s.node].kind);
    EXPECT_EQ(s.bag_size, static_cast<int>(ntd.nodes[s.node].bag.size()));
    EXPECT_GE(s.seconds, 0.0);
  }
}

TEST(RecoverTest, Triangle) {
  auto g = complete_graph(3);
  auto res = count_partitions(g, nice_of(g), {3, 1}, true);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(res.witness->cliques, (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
}

TEST(RecoverTest, ZeroCountHasNoWitness) {
  auto g = path_graph(3);
  auto res = count_partitions(g, nice_of(g), {3, 1}, true);
  EXPECT_EQ(res.count, 0);
  EXPECT_FALSE(res.witness.has_value());
}

TEST(RecoverTest, RetainedAndRecomputedTablesBothWork) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_graph(9, 0.6, rng);
    auto ntd = nice_of(g);
    CliquePartitionQuery q{3, 3};
    CliquePartitionCounter<Count> kept(g, ntd, q);
    CountOptions lean;
    lean.keep_tables = false;
    CliquePartitionCounter<Count> recompute(g, ntd, q, lean);
    EXPECT_EQ(kept.count(), recompute.count());
    auto a = recover_partition(kept);
    auto b = recompute.recover();
    ASSERT_EQ(a.has_value(), kept.count() != 0);
    ASSERT_EQ(b.has_value(), a.has_value());
    if (a) {
      EXPECT_EQ(witness_problem(g, q, *a), "");
      EXPECT_EQ(witness_problem(g, q, *b), "");
    }
  }
}

TEST(WitnessProblemTest, DetectsViolations) {
  auto g = path_graph(4);
  CliquePartitionQuery q{2, 2};
  EXPECT_EQ(witness_problem(g, q, {{{0, 1}, {2, 3}}}), "");
  EXPECT_NE(witness_problem(g, q, {{{0, 2}, {1, 3}}}), "");
  EXPECT_NE(witness_problem(g, q, {{{0, 1}, {2}}}), "");
  EXPECT_NE(witness_problem(g, q, {{{0, 1}, {1, 2}, {3}}}), "");
  EXPECT_NE(witness_problem(g, q, {{{0, 1}, {2}, {3}}}), "");
  EXPECT_NE(witness_problem(g, q, {{{0, 1, 2}, {3}}}), "");
}

TEST(ModularCountTest, AgreesWithExactResidues) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(10, 0.7, rng);
    auto ntd = nice_of(g);
    CliquePartitionQuery q{3, 2};
    auto exact = count_partitions(g, ntd, q);
    auto mod = count_partitions_modular(g, ntd, q, trial, true);
    EXPECT_EQ(Count(mod.r1), exact.count % mod.p1);
    EXPECT_EQ(Count(mod.r2), exact.count % mod.p2);
    EXPECT_EQ(mod.combined, exact.count % (Count(mod.p1) * mod.p2));
    EXPECT_EQ(mod.nonzero, exact.count != 0);
    EXPECT_EQ(mod.witness.has_value(), exact.count != 0);
    if (mod.witness) EXPECT_EQ(witness_problem(g, q, *mod.witness), "");
  }
}

TEST(ModularCountTest, LargeCountsSurviveReduction) {
  // K_12 into six edges: 11!! = 10395.
  auto g = complete_graph(12);
  auto mod = count_partitions_modular(g, nice_of(g), {2, 6}, 7);
  EXPECT_EQ(mod.combined, 10395);
  EXPECT_NE(mod.p1, mod.p2);
}

TEST(ComplementColoringTest, FiveCycleWithThreeColors) {
  auto g = cycle_graph(5);
  auto res = equitable_color_via_complement(g, 3);
  ASSERT_TRUE(res.coloring.has_value());
  EXPECT_EQ(res.partitions, 5);
  EXPECT_TRUE(validate_coloring(g, *res.coloring, true).ok());
  auto sizes = res.coloring->class_sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 2, 2}));
}

TEST(ComplementColoringTest, CompleteGraphNeedsAllColors) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) EXPECT_FALSE(equitable_color_via_complement(complete_graph(n), k).coloring.has_value());
    EXPECT_TRUE(equitable_color_via_complement(complete_graph(n), n).coloring.has_value());
  }
}

TEST(ComplementColoringTest, EdgelessIsBalanced) {
  for (int k = 1; k <= 8; ++k) {
    auto res = equitable_color_via_complement(Graph(6), k);
    ASSERT_TRUE(res.coloring.has_value());
    EXPECT_TRUE(validate_coloring(Graph(6), *res.coloring, true).ok());
  }
  auto res = equitable_color_via_complement(Graph(6), 3);
  EXPECT_EQ(res.coloring->class_sizes(), (std::vector<int>{2, 2, 2}));
}

TEST(ComplementColoringTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 9;
    auto g = testing::random_graph(n, 0.2 + 0.15 * (trial % 5), rng);
    for (int k = 1; k <= n; ++k) {
      auto res = equitable_color_via_complement(g, k);
      ASSERT_EQ(res.coloring.has_value(), brute_equitable(g, k).has_value());
      if (res.coloring) EXPECT_TRUE(testing::coloring_ok_by_definition(g, *res.coloring, true));
    }
  }
}

}  // namespace
}  // namespace equicolor
