// Copyright 2026 The pareto-submod Authors.
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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "pareto/baselines.hpp"
#include "pareto/instance.hpp"
#include "pareto/io.hpp"
#include "test_util.hpp"

namespace pareto {
namespace {

// Item i covers i + 1 private skills, so f is modular with f({i}) = i + 1.
CoverageSpec modular_coverage(const std::vector<std::uint32_t>& sizes) {
  CoverageSpec s;
  std::uint32_t next = 0;
  for (auto k : sizes) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t j = 0; j < k; ++j) {
      row.push_back(next);
      s.task.push_back(next++);
    }
    s.skills.push_back(row);
  }
  return s;
}

void expect_valid(const FrontierResult& r) {
  EXPECT_GE(r.candidate_count, r.frontier.size());
  for (std::size_t i = 1; i < r.frontier.size(); ++i) {
    EXPECT_LT(r.frontier[i - 1].cost, r.frontier[i].cost);
    EXPECT_LT(r.frontier[i - 1].utility, r.frontier[i].utility);
  }
}

TEST(TopKTest, Examples) {
  const Utility f(modular_coverage({3, 1}));
  const Cost c(LinearCost{{1, 1}}, 2);
  const auto one = top_k(f, c, {1});
  ASSERT_EQ(one.frontier.size(), 1u);
  EXPECT_EQ(one.frontier[0].solution.members(), std::vector<ItemId>{0});
  const auto zero = top_k(f, c, {0});
  ASSERT_EQ(zero.frontier.size(), 1u);
  EXPECT_TRUE(zero.frontier[0].solution.empty());
}

TEST(TopKTest, FullTieKeepsIndexOrder) {
  const Utility f(modular_coverage({2, 2, 2, 2}));
  const Cost c(LinearCost{{1, 1, 1, 1}}, 4);
  const auto r = top_k(f, c, {0, 1, 2, 3, 4});
  ASSERT_EQ(r.frontier.size(), 5u);
  EXPECT_EQ(r.frontier[2].solution.members(), (std::vector<ItemId>{0, 1}));
  EXPECT_EQ(r.frontier[3].solution.members(), (std::vector<ItemId>{0, 1, 2}));
}

TEST(TopKTest, RatioOrderAndRejectsDiameter) {
  // Ratios 4/4 = 1, 3/1 = 3, 2/1 = 2: order 1, 2, 0.
  const Utility f(modular_coverage({4, 3, 2}));
  const Cost c(LinearCost{{4, 1, 1}}, 3);
  const auto r = top_k(f, c, {1, 2, 5, 6});
  ASSERT_EQ(r.frontier.size(), 3u);
  EXPECT_EQ(r.frontier[0].solution.members(), std::vector<ItemId>{1});
  EXPECT_EQ(r.frontier[1].solution.members(), (std::vector<ItemId>{1, 2}));
  EXPECT_EQ(r.frontier[2].cost, 6.0);
  const Cost diameter(DiameterCost{DistanceMatrix(SquareMatrix(3))}, 3);
  EXPECT_THROW(top_k(f, diameter, {1}), std::invalid_argument);
}

TEST(RandomSubsetsTest, ExtremesAndDeterminism) {
  std::mt19937_64 rng(1);
  const std::size_t n = 10;
  const Utility f(testing_util::random_facility(rng, n));
  const Cost c(testing_util::random_weights(rng, n), n);
  const auto none = random_subsets(f, c, {0}, 5);
  ASSERT_EQ(none.frontier.size(), 1u);
  EXPECT_EQ(none.frontier[0].cost, 0.0);
  const auto all = random_subsets(f, c, {n}, 5);
  EXPECT_EQ(all.frontier[0].utility, f(Solution::full(n)));
  EXPECT_EQ(all.frontier[0].cost, c(Solution::full(n)));
  std::vector<std::size_t> ks = {0, 2, 4, 6, 8, 10};
  EXPECT_EQ(frontier_to_csv(random_subsets(f, c, ks, 9).frontier),
            frontier_to_csv(random_subsets(f, c, ks, 9).frontier));
  const auto r = random_subsets(f, c, ks, 9);
  EXPECT_EQ(r.candidate_count, ks.size());
  for (const auto& p : r.frontier) EXPECT_EQ(p.utility, f(p.solution));
  EXPECT_THROW(random_subsets(f, c, {11}, 1), std::invalid_argument);
}

TEST(RandomSubsetsTest, SubsetSizesMatchGrid) {
  std::mt19937_64 rng(2);
  const std::size_t n = 12;
  const Utility f(testing_util::random_coverage(rng, n, 10, 3));
  const Cost c(CardinalityCost{}, n);
  const auto r = random_subsets(f, c, {3, 7}, 4);
  for (const auto& p : r.frontier) EXPECT_TRUE(p.cost == 3.0 || p.cost == 7.0);
}

TEST(DistanceGreedyTest, SingleItemAndCoincidentItems) {
  const Utility one(FacilityLocationSpec{SquareMatrix::from_rows({{1}})});
  EXPECT_EQ(distance_greedy(one, DistanceMatrix(SquareMatrix(1))).frontier.size(), 1u);

  // Items 0 and 1 sit on the same point; 2 is far away. After 0, the zero
  // distance to 1 is floored so 1 still competes and wins on its large ratio.
  const Utility f(modular_coverage({3, 1, 1}));
  const DistanceMatrix d(SquareMatrix::from_rows({{0, 0, 5}, {0, 0, 5}, {5, 5, 0}}));
  const auto r = distance_greedy(f, d);
  EXPECT_EQ(r.candidate_count, 4u);
  ASSERT_EQ(r.frontier.size(), 2u);
  EXPECT_EQ(r.frontier[0].solution.members(), (std::vector<ItemId>{0, 1}));
  EXPECT_EQ(r.frontier[0].cost, 0.0);
  EXPECT_EQ(r.frontier[1].cost, 5.0);
}

TEST(DistanceGreedyTest, DividesGainByAverageDistance) {
  // After item 0, item 1 (gain 2, avg distance 4 -> 0.5) loses to item 2 (gain 1, distance 1 -> 1).
  const Utility f(modular_coverage({5, 2, 1}));
  const DistanceMatrix d(SquareMatrix::from_rows({{0, 4, 1}, {4, 0, 4}, {1, 4, 0}}));
  const auto r = distance_greedy(f, d);
  ASSERT_GE(r.frontier.size(), 2u);
  EXPECT_EQ(r.frontier[1].solution.members(), (std::vector<ItemId>{0, 2}));
}

TEST(DistanceGreedyTest, ValidOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 15;
    const auto d = testing_util::random_plane_metric(rng, n);
    const Utility f(testing_util::random_facility(rng, n));
    const auto r = distance_greedy(f, d);
    expect_valid(r);
    EXPECT_EQ(r.candidate_count, n + 1);
    const Cost c(DiameterCost{d}, n);
    for (const auto& p : r.frontier) EXPECT_EQ(p.cost, c(p.solution));
  }
}

TEST(PruneGraphTest, ModularRemovesSmallestFirst) {
  const Utility f(modular_coverage({2, 5, 1, 3}));
  const Cost c(CardinalityCost{}, 4);
  const auto r = prune_graph(f, c);
  EXPECT_EQ(r.candidate_count, 5u);
  ASSERT_EQ(r.frontier.size(), 5u);
  EXPECT_EQ(r.frontier[1].solution.members(), std::vector<ItemId>{1});
  EXPECT_EQ(r.frontier[2].solution.members(), (std::vector<ItemId>{1, 3}));
  EXPECT_EQ(r.frontier[3].solution.members(), (std::vector<ItemId>{0, 1, 3}));
}

TEST(PruneGraphTest, ValidOnRandomInstances) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 12;
    const Utility f(testing_util::random_influence(rng, n, 0.2));
    const Cost c(testing_util::random_weights(rng, n), n);
    const auto r = prune_graph(f, c);
    expect_valid(r);
    EXPECT_EQ(r.candidate_count, n + 1);
  }
}

TEST(TopDegreeTest, StarAndRegularGraphs) {
  const std::vector<GraphEdge> star = {{0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(degrees_from_edges(4, star), (std::vector<std::size_t>{1, 1, 1, 3}));
  const Utility f(modular_coverage({1, 1, 1, 1}));
  const Cost c(CardinalityCost{}, 4);
  const auto r = top_degree(f, c, degrees_from_edges(4, star));
  EXPECT_EQ(r.candidate_count, 5u);
  EXPECT_EQ(r.frontier[1].solution.members(), std::vector<ItemId>{3});
  const std::vector<GraphEdge> cycle = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const auto ring = top_degree(f, c, degrees_from_edges(4, cycle));
  EXPECT_EQ(ring.frontier[2].solution.members(), (std::vector<ItemId>{0, 1}));
}

TEST(TopDegreeTest, DegreesCountDistinctNeighbours) {
  const std::vector<InfluenceEdge> arcs = {{0, 1, 0.5}, {1, 0, 0.5}, {2, 2, 0.5}, {0, 2, 0.1}};
  EXPECT_EQ(degrees_from_edges(3, arcs), (std::vector<std::size_t>{2, 1, 1}));
}

}  // namespace
}  // namespace pareto
