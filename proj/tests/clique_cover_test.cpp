// Copyright 2026 The cliquecode Authors
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

#include "cliquecode/clique_cover.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cliquecode/oracle.hpp"
#include "test_util.hpp"

namespace cliquecode {
namespace {

using testing::sample_cliques;
using testing::sample_graph;
using testing::graph;
using testing::seq;
using testing::witness_graph;

std::set<std::set<Clique>> covering_sets(const std::vector<TotalCliqueCovering>& coverings) {
  std::set<std::set<Clique>> out;
  for (const auto& s : coverings) out.insert(s.as_set());
  return out;
}

TEST(MaximalCliques, SampleGraph) {
  EXPECT_EQ(maximal_cliques(sample_graph()), sample_cliques());
}

TEST(MaximalCliques, SmallGraphs) {
  EXPECT_EQ(maximal_cliques(graph(1, {})), (std::vector<Clique>{{0}}));
  EXPECT_EQ(maximal_cliques(generate_family(Family::kComplete, 4)),
            (std::vector<Clique>{{0, 1, 2, 3}}));
  EXPECT_EQ(maximal_cliques(graph(3, {{0, 1}})), (std::vector<Clique>{{0, 1}, {2}}));
  EXPECT_EQ(maximal_cliques(witness_graph()),
            (std::vector<Clique>{{0, 1, 2}, {0, 2, 3}, {1, 2, 4}}));
}

TEST(AllCliques, Counts) {
  // Three edges and the triangle.
  EXPECT_EQ(all_cliques(generate_family(Family::kComplete, 3), 2).size(), 4u);
  // Four vertices and four edges.
  EXPECT_EQ(all_cliques(generate_family(Family::kCycle, 4), 1).size(), 8u);
  // Every nonempty subset of K5.
  EXPECT_EQ(all_cliques(generate_family(Family::kComplete, 5), 1).size(), 31u);
}

TEST(AllCliques, EveryEntryIsAClique) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::random_graph(rng, 1 + rng() % 8, 0.5);
    for (const auto& c : all_cliques(g, 1)) EXPECT_TRUE(is_clique(g, c));
  }
}

TEST(TotalCliqueCovering, Validity) {
  auto c4 = generate_family(Family::kCycle, 4);
  EXPECT_TRUE(is_total_clique_covering(
      c4, TotalCliqueCovering({{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  EXPECT_FALSE(is_total_clique_covering(c4, TotalCliqueCovering({{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_FALSE(is_total_clique_covering(c4, TotalCliqueCovering({{0, 1, 2}, {2, 3}, {0, 3}})));
  // Edges covered but the isolated vertex is not.
  EXPECT_FALSE(is_total_clique_covering(graph(3, {{0, 1}}), TotalCliqueCovering({{0, 1}})));
  EXPECT_TRUE(is_total_clique_covering(graph(3, {{0, 1}}), TotalCliqueCovering({{0, 1}, {2}})));
  EXPECT_THROW(TotalCliqueCovering(std::vector<Clique>{Clique{}}), InputError);
}

TEST(TotalCliqueCovering, PrimeBearing) {
  auto g = graph(3, {{0, 1}});
  EXPECT_EQ(prime_bearing_cliques(g, TotalCliqueCovering({{2}, {0, 1}})),
            (std::vector<std::size_t>{1}));
}

TEST(ThetaT, Examples) {
  EXPECT_EQ(theta_t(sample_graph()), 5u);
  EXPECT_EQ(theta_t(generate_family(Family::kCycle, 4)), 4u);
  EXPECT_EQ(theta_t(generate_family(Family::kComplete, 6)), 1u);
  EXPECT_EQ(theta_t(generate_family(Family::kEmpty, 4)), 4u);
  EXPECT_EQ(theta_t(graph(1, {})), 1u);
  EXPECT_EQ(theta_t(witness_graph()), 3u);
}

TEST(MinimumCoverings, SampleGraphIsUnique) {
  auto result = minimum_total_coverings(sample_graph());
  EXPECT_EQ(result.theta, 5u);
  ASSERT_EQ(result.coverings.size(), 1u);
  EXPECT_EQ(result.coverings[0].as_set(), TotalCliqueCovering(sample_cliques()).as_set());
}

TEST(MinimumCoverings, WitnessUsesNonMaximalClique) {
  auto result = minimum_total_coverings(witness_graph());
  ASSERT_EQ(result.coverings.size(), 2u);
  const std::set<std::set<Clique>> expected{
      {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}},
      {{0, 1}, {0, 2, 3}, {1, 2, 4}},
  };
  EXPECT_EQ(covering_sets(result.coverings), expected);
}

TEST(MinimumCoverings, CycleFourIsUnique) {
  auto result = minimum_total_coverings(generate_family(Family::kCycle, 4));
  EXPECT_EQ(result.theta, 4u);
  EXPECT_EQ(result.coverings.size(), 1u);
}

TEST(MinimumCoverings, IsolatedVertices) {
  auto result = minimum_total_coverings(graph(4, {{1, 2}}));
  EXPECT_EQ(result.theta, 3u);
  ASSERT_EQ(result.coverings.size(), 1u);
  EXPECT_EQ(result.coverings[0].as_set(), (std::set<Clique>{{0}, {1, 2}, {3}}));
}

TEST(MinimumCoverings, Budget) {
  EXPECT_THROW(minimum_total_coverings(sample_graph(), SearchBudget{3}), BudgetExceeded);
  EXPECT_THROW(theta_t(generate_family(Family::kCycle, 8), SearchBudget{2}), BudgetExceeded);
}

TEST(MinimumCoverings, AgreesWithOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      auto fast = minimum_total_coverings(g);
      auto slow = brute_force_minimum_coverings(g);
      std::set<std::set<Clique>> oracle;
      for (const auto& s : slow) oracle.insert({s.begin(), s.end()});
      ASSERT_FALSE(slow.empty());
      EXPECT_EQ(fast.theta, slow.front().size());
      EXPECT_EQ(covering_sets(fast.coverings), oracle);
    });
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testing::random_graph(rng, 5 + rng() % 2, 0.5);
    auto fast = minimum_total_coverings(g);
    std::set<std::set<Clique>> oracle;
    for (const auto& s : brute_force_minimum_coverings(g)) oracle.insert({s.begin(), s.end()});
    EXPECT_EQ(covering_sets(fast.coverings), oracle);
  }
}

TEST(CoveringFromSequence, Examples) {
  EXPECT_EQ(covering_from_sequence(seq({2, 3, 10, 15})).as_set(),
            (std::set<Clique>{{0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(covering_from_sequence(seq({1})).as_set(), (std::set<Clique>{{0}}));
  EXPECT_EQ(covering_from_sequence(seq({1, 1, 2, 2})).as_set(),
            (std::set<Clique>{{0}, {1}, {2, 3}}));
  EXPECT_EQ(covering_from_sequence(seq({2, 2, 2})).as_set(), (std::set<Clique>{{0, 1, 2}}));
}

TEST(Prop1Certificate, Examples) {
  auto g = sample_graph();
  const std::vector<Vertex> independent{0, 4, 6, 8, 10};
  EXPECT_TRUE(prop1_certificate(g, independent, TotalCliqueCovering(sample_cliques())));
  // Adjacent pair.
  const std::vector<Vertex> bad{0, 1, 6, 8, 10};
  EXPECT_FALSE(prop1_certificate(g, bad, TotalCliqueCovering(sample_cliques())));
  // C4 has no such certificate: alpha is 2, theta is 4.
  auto c4 = generate_family(Family::kCycle, 4);
  const std::vector<Vertex> pair{0, 2};
  EXPECT_FALSE(prop1_certificate(c4, pair, TotalCliqueCovering({{0, 1}, {2, 3}})));
}

TEST(WriteCovering, Format) {
  EXPECT_EQ(write_covering(TotalCliqueCovering({{1, 0}, {2}})), "0 1\n2\n");
}

}  // namespace
}  // namespace cliquecode
