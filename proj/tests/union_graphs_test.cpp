#include "bcpp/union_graphs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bcpp/errors.hpp"
#include "test_support.hpp"

namespace bcpp {
namespace {

using namespace ::bcpp::testing;

TEST(BuildG1Test, Examples) {
  const UnionDigraph g = build_g1(make_instance({{600, 500}, {500, 600}}));
  EXPECT_EQ(g.weight(0, 1), 1);
  EXPECT_EQ(g.weight(1, 0), 0);

  const UnionDigraph full =
      build_g1(make_instance({{1000, 1000}, {1000, 1000}, {1000, 1000}}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(full.weight(i, j), 0);
  }

  const UnionDigraph asym = build_g1(make_instance({{700, 600}, {400, 500}}));
  EXPECT_EQ(asym.weight(0, 1), 1);
  EXPECT_EQ(asym.weight(1, 0), 0);
}

TEST(BuildG1Test, RejectsSingleChart) {
  EXPECT_THROW(build_g1(make_instance({{1, 1}})), InvalidInput);
  EXPECT_THROW(build_g2(make_instance({{1, 1}})), InvalidInput);
}

TEST(BuildG2Test, Examples) {
  EXPECT_TRUE(build_g2(make_instance({{500, 500}, {500, 500}})).has_edge(0, 1));
  EXPECT_FALSE(build_g2(make_instance({{600, 600}, {500, 500}})).has_edge(0, 1));

  // Pairs checked by hand: {1,2} 1000/1000, {1,4} 900/900, {2,4} 900/900,
  // {3,4} 1000/1000 fit; {1,3} and {2,3} need 1100.
  const UnionGraph g = build_g2(
      make_instance({{500, 500}, {500, 500}, {600, 600}, {400, 400}}));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 4; ++u) {
    for (const int v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  EXPECT_EQ(edges, (std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(g.edge_count(), 4);
}

TEST(UnionGraphsTest, TwoUnionImpliesAOneUnionArc) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = random_instance(rng, 2 + trial % 9, trial % kInstanceKinds);
    const UnionDigraph g1 = build_g1(inst);
    const UnionGraph g2 = build_g2(inst);
    for (int i = 0; i < inst.size(); ++i) {
      for (int j = i + 1; j < inst.size(); ++j) {
        if (g2.has_edge(i, j)) {
          EXPECT_TRUE(g1.weight(i, j) == 1 || g1.weight(j, i) == 1);
        }
      }
    }
  }
}

TEST(CycleOfPackingTest, FollowsOrderAndRejectsTwoUnions) {
  const Instance inst = make_instance({{600, 500}, {500, 600}, {900, 900}});
  const UnionDigraph g = build_g1(inst);
  EXPECT_EQ(cycle_of_packing(SequencePacking{{0, 1, 2}, {1, 0}}, g).tour,
            (std::vector<int>{0, 1, 2}));
  const Instance pair = make_instance({{500, 500}, {500, 500}});
  EXPECT_THROW(cycle_of_packing(SequencePacking{{0, 1}, {2}}, build_g1(pair)),
               InvalidInput);
}

TEST(CycleOfPackingTest, WeightBoundsOneUnions) {
  // Two charts in a 1-union close into a cycle of weight >= 1.
  const Instance inst = make_instance({{600, 500}, {500, 600}});
  const UnionDigraph g = build_g1(inst);
  EXPECT_GE(cycle_weight(cycle_of_packing(SequencePacking{{0, 1}, {1}}, g), g), 1);
}

TEST(PackingOfCycleTest, StartsAfterAZeroArc) {
  const Instance inst = make_instance({{600, 500}, {500, 600}, {900, 900}});
  const UnionDigraph g = build_g1(inst);
  // Tour weights: 0->1->2->0 has weight 1; 0->2->1->0 has weight 0.
  const HamCycle h{{1, 2, 0}};
  EXPECT_EQ(cycle_weight(h, g), 1);
  const SequencePacking p = packing_of_cycle(h, g, inst);
  EXPECT_EQ(p.order, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.overlaps, (std::vector<int>{1, 0}));
  EXPECT_EQ(packing_length(p), 5);
  EXPECT_EQ(cycle_weight(HamCycle{{0, 2, 1}}, g), 0);
}

TEST(PackingOfCycleTest, AllZeroAndAllOneDigraphs) {
  const Instance heavy =
      make_instance({{1000, 1000}, {1000, 1000}, {1000, 1000}, {1000, 1000}});
  const UnionDigraph g0 = build_g1(heavy);
  const SequencePacking p0 = packing_of_cycle(HamCycle{{2, 0, 3, 1}}, g0, heavy);
  EXPECT_EQ(packing_length(p0), 8);

  const Instance light =
      make_instance({{100, 100}, {200, 100}, {100, 300}, {400, 100}, {100, 100}});
  const UnionDigraph g1 = build_g1(light);
  const HamCycle h{{3, 1, 4, 0, 2}};
  ASSERT_EQ(cycle_weight(h, g1), 5);
  const SequencePacking p1 = packing_of_cycle(h, g1, light);
  EXPECT_EQ(count_unions(p1).k1, 4);
  EXPECT_EQ(p1.order.front(), 0);  // full-weight cycles open at chart 0
}

TEST(PackingOfCycleTest, EqTwoIdentityExhaustive) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;  // 2..7
    const Instance inst = random_instance(rng, n, trial % kInstanceKinds);
    const UnionDigraph g = build_g1(inst);
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
      HamCycle h{{0}};
      h.tour.insert(h.tour.end(), rest.begin(), rest.end());
      const SequencePacking p = packing_of_cycle(h, g, inst);
      ASSERT_EQ(count_unions(p).k1, std::min(cycle_weight(h, g), n - 1));
      ASSERT_EQ(count_unions(p).k2, 0);
      ASSERT_TRUE(validate(inst, p).ok());
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

TEST(PackingOfCycleTest, RoundTripNeverLosesOneUnions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;  // 2..6
    const Instance inst = random_instance(rng, n, trial % kInstanceKinds);
    const UnionDigraph g = build_g1(inst);
    for_each_sequence_packing(
        inst, 1, [&](const std::vector<int>& order, const std::vector<int>& t) {
          const SequencePacking p{order, t};
          const HamCycle h = cycle_of_packing(p, g);
          ASSERT_GE(cycle_weight(h, g), count_unions(p).k1);
          ASSERT_GE(count_unions(packing_of_cycle(h, g, inst)).k1,
                    count_unions(p).k1);
        });
  }
}

}  // namespace
}  // namespace bcpp
