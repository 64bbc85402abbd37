#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ptconf/pointconf.hpp"
#include "ptconf/treecount.hpp"
#include "test_support.hpp"

using namespace ptconf;

namespace {

SpanTree tree(std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  return SpanTree{std::move(edges)};
}

LevelQuiver two_sinks(int m, int l0, int l1) {
  LevelQuiver Q;
  Q.sources = m;
  Q.sink_levels = {l0, l1};
  return Q;
}

// Independent oracle: choose a neighbor set of size 2l+1 for every sink and
// keep the choices that form a tree (right edge count, no cycle).
BigInt trees_by_neighbor_sets(const WPartition& P, int m) {
  std::vector<int> levels;
  for (auto [l, k] : P.mult)
    for (int i = 0; i < k; ++i) levels.push_back(l);
  const int s = static_cast<int>(levels.size());
  long edges = 0;
  for (int l : levels) edges += 2 * l + 1;
  if (edges != m + s - 1) return 0;

  std::vector<std::vector<unsigned>> choices(s);
  for (int j = 0; j < s; ++j)
    for (unsigned mask = 0; mask < (1u << m); ++mask)
      if (std::popcount(mask) == 2 * levels[j] + 1) choices[j].push_back(mask);

  BigInt count = 0;
  std::vector<unsigned> pick(s);
  std::function<void(int)> rec = [&](int j) {
    if (j == s) {
      std::vector<int> parent(m + s);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (int t = 0; t < s; ++t)
        for (int a = 0; a < m; ++a)
          if (pick[t] & (1u << a)) {
            const int x = find(a), y = find(m + t);
            if (x == y) return;
            parent[x] = y;
          }
      ++count;
      return;
    }
    for (unsigned c : choices[j]) {
      pick[j] = c;
      rec(j + 1);
    }
  };
  rec(0);
  return count;
}

long count_spanning_trees(const LevelQuiver& Q) {
  long n = 0;
  for_each_spanning_tree(Q, [&](const SpanTree&) { ++n; });
  return n;
}

}  // namespace

TEST(WPartition, ParseAndPrint) {
  const WPartition P = WPartition::parse("1:2,2:1");
  EXPECT_EQ(P.total(), 4);
  EXPECT_EQ(P.parts(), 3);
  EXPECT_EQ(P.to_string(), "1:2,2:1");
  EXPECT_EQ(WPartition::parse("1:1,1:1"), WPartition::parse("1:2"));
  EXPECT_THROW(WPartition::parse("1"), std::invalid_argument);
  EXPECT_THROW(WPartition::parse("a:1"), std::invalid_argument);
  EXPECT_THROW(WPartition::parse("1:2x"), std::invalid_argument);
  EXPECT_THROW(WPartition::parse("0:1"), std::invalid_argument);
  EXPECT_THROW(WPartition::parse("1:0"), std::invalid_argument);
}

TEST(Partitions, CountsMatchPartitionNumbers) {
  const std::size_t p[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 1; d <= 8; ++d) {
    const auto ps = partitions(d);
    EXPECT_EQ(ps.size(), p[d - 1]);
    for (const auto& P : ps) EXPECT_EQ(P.total(), d);
  }
}

TEST(LevelQuiver, Build) {
  const LevelQuiver Q = build_level_quiver(WPartition::parse("1:2,2:1"), 9);
  EXPECT_EQ(Q.sources, 9);
  EXPECT_EQ(Q.sink_levels, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(Q.vertices(), 12);
  EXPECT_THROW(build_level_quiver(WPartition::parse("1:1"), 0), std::invalid_argument);
}

TEST(SpanningTrees, CountMatchesCompleteBipartiteFormula) {
  // K_{m,s} has m^(s-1) s^(m-1) spanning trees
  for (int m = 1; m <= 5; ++m)
    for (int s = 1; s <= 3; ++s) {
      LevelQuiver Q;
      Q.sources = m;
      Q.sink_levels.assign(s, 1);
      long expected = 1;
      for (int i = 0; i < s - 1; ++i) expected *= m;
      for (int i = 0; i < m - 1; ++i) expected *= s;
      EXPECT_EQ(count_spanning_trees(Q), expected) << m << "," << s;
    }
}

TEST(IsStableTree, Examples) {
  const LevelQuiver star = build_level_quiver(WPartition::parse("1:1"), 3);
  EXPECT_TRUE(is_stable_tree(tree({{0, 0}, {1, 0}, {2, 0}}), star));

  // five sources, two level-1 sinks
  const LevelQuiver K = two_sinks(5, 1, 1);
  const SpanTree lopsided = tree({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {4, 1}});
  const SpanTree balanced = tree({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 1}});
  EXPECT_FALSE(is_stable_tree(lopsided, K));
  EXPECT_TRUE(is_stable_tree(balanced, K));
  EXPECT_FALSE(neighbor_test(lopsided, K));
  EXPECT_TRUE(neighbor_test(balanced, K));
  EXPECT_THROW(is_stable_tree(tree({{0, 0}}), K), std::invalid_argument);
  EXPECT_THROW(neighbor_test(tree({{0, 0}}), K), std::invalid_argument);
}

TEST(IsStableTree, NeighborCriterionEquivalence) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& P : partitions(d)) {
      const LevelQuiver Q = build_level_quiver(P, 2 * d + 1);
      if (Q.sources * Q.sinks() > 21) continue;
      for_each_spanning_tree(Q, [&](const SpanTree& T) { EXPECT_EQ(is_stable_tree(T, Q), neighbor_test(T, Q)) << P.to_string(); });
    }
}

TEST(IsStableTree, InvariantUnderSourcePermutation) {
  const WPartition P = WPartition::parse("1:2");
  const LevelQuiver Q = build_level_quiver(P, 5);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), ptconf::testing::rng());
    for_each_spanning_tree(Q, [&](const SpanTree& T) {
      std::vector<std::pair<int, int>> e;
      for (auto [a, j] : T.edges) e.emplace_back(perm[a], j);
      EXPECT_EQ(is_stable_tree(T, Q), is_stable_tree(tree(e), Q));
    });
  }
}

TEST(NStable, Examples) {
  EXPECT_EQ(n_stable(WPartition::parse("1:1"), 3), 1);
  EXPECT_EQ(n_stable(WPartition::parse("2:1"), 5), 1);
  EXPECT_EQ(n_stable(WPartition::parse("1:2"), 5), 30);
  EXPECT_EQ(n_stable_bruteforce(WPartition::parse("1:2"), 5, TreeTest::stability), 30);
  EXPECT_EQ(n_stable_degree_formula(WPartition::parse("1:2"), 5), 30);
  EXPECT_EQ(n_stable(WPartition::parse("1:2"), 4), 0);
}

TEST(NStable, RoutesAgreeWithNeighborSetOracle) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& P : partitions(d)) {
      const int m = 2 * d + 1;
      if (P.parts() > 3) continue;  // keeps the oracle search under a million picks
      const BigInt oracle = trees_by_neighbor_sets(P, m);
      EXPECT_EQ(n_stable_degree_formula(P, m), oracle) << P.to_string();
      EXPECT_EQ(n_stable(P, m), oracle) << P.to_string();
      if (m * P.parts() <= 21) EXPECT_EQ(n_stable_bruteforce(P, m, TreeTest::stability), oracle) << P.to_string();
    }
}

TEST(ChiMps, Examples) {
  const long expected[] = {1, 7, 138, 5477, 367640};
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(chi_mps(d), expected[d - 1]) << d;
    EXPECT_EQ(chi_closed(d), expected[d - 1]) << d;
  }
  EXPECT_THROW(chi_mps(0), std::invalid_argument);
  EXPECT_THROW(chi_closed(0), std::invalid_argument);
}

TEST(ChiClosed, MatchesEulerOfPoincare) {
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(chi_closed(d), euler_dm(d, 2 * d + 1)) << d;
}

TEST(YSeries, Coefficients) {
  EXPECT_EQ(y_series_coeff(1), Rational(1, 2));
  EXPECT_EQ(y_series_coeff(2), Rational(7, 24));
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(y_series_coeff(d) * Rational(factorial(2 * d)), Rational(chi_closed(d))) << d;
  EXPECT_THROW(y_series_coeff(0), std::invalid_argument);
}
