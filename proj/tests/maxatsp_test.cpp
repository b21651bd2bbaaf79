#include "bcpp/maxatsp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bcpp/errors.hpp"
#include "test_support.hpp"

namespace bcpp {
namespace {

using namespace ::bcpp::testing;

UnionDigraph constant_digraph(int n, std::uint8_t w) {
  return UnionDigraph(n, std::vector<std::uint8_t>(n * n, w));
}

UnionDigraph two_pairs() {
  std::vector<std::uint8_t> w(16, 0);
  w[0 * 4 + 1] = w[1 * 4 + 0] = w[2 * 4 + 3] = w[3 * 4 + 2] = 1;
  return UnionDigraph(4, w);
}

TEST(SolveExactTest, ConstantDigraphs) {
  const HamCycle zero = solve_exact(constant_digraph(4, 0));
  EXPECT_TRUE(is_hamiltonian(zero, 4));
  EXPECT_EQ(cycle_weight(zero, constant_digraph(4, 0)), 0);
  EXPECT_EQ(zero.tour, (std::vector<int>{0, 1, 2, 3}));  // lexicographic tie-break
  EXPECT_EQ(cycle_weight(solve_exact(constant_digraph(5, 1)),
                         constant_digraph(5, 1)),
            5);
}

TEST(SolveExactTest, MatchesEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;  // 2..8
    const UnionDigraph g = random_digraph(rng, n, 0.15 + 0.1 * (trial % 8));
    const HamCycle h = solve_exact(g);
    ASSERT_TRUE(is_hamiltonian(h, n));
    ASSERT_EQ(h.tour.front(), 0);
    ASSERT_EQ(cycle_weight(h, g), brute_max_tour_weight(g));
    ASSERT_EQ(h, solve_exact_serial(g));
  }
}

TEST(SolveExactTest, WeightInvariantUnderRelabeling) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 9;
    const UnionDigraph g = random_digraph(rng, n, 0.3);
    const std::vector<int> perm = random_permutation(rng, n);
    std::vector<std::uint8_t> w(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[perm[i] * n + perm[j]] = g.weight(i, j);
    }
    const UnionDigraph shuffled(n, w);
    EXPECT_EQ(cycle_weight(solve_exact(g), g),
              cycle_weight(solve_exact(shuffled), shuffled));
  }
}

TEST(SolveExactTest, SizeLimits) {
  EXPECT_THROW(solve_exact(constant_digraph(1, 0)), InvalidInput);
  EXPECT_THROW(solve_exact(constant_digraph(kExactSizeLimit + 1, 0)),
               SizeLimitExceeded);
  const AtspEngine exact = make_engine("exact");
  EXPECT_THROW(exact.solve(constant_digraph(kExactSizeLimit + 1, 0)),
               SizeLimitExceeded);
}

TEST(SolveExactTest, LargestSupportedSize) {
  std::mt19937_64 rng(41);
  const UnionDigraph g = random_digraph(rng, kExactSizeLimit, 0.1);
  const HamCycle h = solve_exact(g);
  EXPECT_TRUE(is_hamiltonian(h, kExactSizeLimit));
}

TEST(CycleCoverTest, TwoPairsExample) {
  const UnionDigraph g = two_pairs();
  const std::vector<int> succ = max_weight_cycle_cover(g);
  int cover = 0;
  for (int v = 0; v < 4; ++v) {
    EXPECT_NE(succ[v], v);
    cover += g.weight(v, succ[v]);
  }
  EXPECT_EQ(cover, 4);
  const HamCycle h = solve_cycle_cover(g);
  EXPECT_TRUE(is_hamiltonian(h, 4));
  EXPECT_GE(cycle_weight(h, g), 2);
  EXPECT_EQ(brute_max_tour_weight(g), 2);
  EXPECT_EQ(cycle_weight(h, g), 2);
}

TEST(CycleCoverTest, ConstantDigraphs) {
  for (int n = 2; n <= 9; ++n) {
    const UnionDigraph ones = constant_digraph(n, 1);
    const std::vector<int> succ = max_weight_cycle_cover(ones);
    int cycles = 0;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      ++cycles;
      for (int u = v; !seen[u]; u = succ[u]) seen[u] = 1;
    }
    const int w = cycle_weight(solve_cycle_cover(ones), ones);
    EXPECT_GE(2 * w, n);
    if (cycles == 1) {
      EXPECT_EQ(w, n);
    }
    EXPECT_EQ(cycle_weight(solve_cycle_cover(constant_digraph(n, 0)),
                           constant_digraph(n, 0)),
              0);
  }
}

TEST(CycleCoverTest, CoverIsMaximumAndTourKeepsHalf) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const UnionDigraph g = random_digraph(rng, n, 0.1 + 0.1 * (trial % 9));
    // Brute-force maximum assignment without fixed points.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best_cover = -1;
    do {
      bool derangement = true;
      int w = 0;
      for (int v = 0; v < n; ++v) {
        derangement = derangement && perm[v] != v;
        w += g.weight(v, perm[v]);
      }
      if (derangement) best_cover = std::max(best_cover, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const std::vector<int> succ = max_weight_cycle_cover(g);
    int cover = 0;
    for (int v = 0; v < n; ++v) cover += g.weight(v, succ[v]);
    ASSERT_EQ(cover, best_cover);

    const HamCycle h = solve_cycle_cover(g);
    ASSERT_TRUE(is_hamiltonian(h, n));
    const int optimum = brute_max_tour_weight(g);
    ASSERT_GE(2 * cycle_weight(h, g), cover);
    ASSERT_GE(cycle_weight(h, g), (optimum + 1) / 2);
  }
}

TEST(LocalSearchTest, ImprovesNearOptimalTour) {
  const UnionDigraph ones = constant_digraph(6, 1);
  EXPECT_EQ(cycle_weight(improve_local_search(ones, HamCycle{{0, 1, 2, 3, 4, 5}}), ones),
            6);

  // Complete digraph minus two arcs used by the starting tour.
  std::vector<std::uint8_t> w(36, 1);
  w[1 * 6 + 2] = 0;
  w[4 * 6 + 5] = 0;
  const UnionDigraph g(6, w);
  const HamCycle start{{0, 1, 2, 3, 4, 5}};
  ASSERT_EQ(cycle_weight(start, g), 4);
  EXPECT_EQ(cycle_weight(improve_local_search(g, start), g), 6);
}

TEST(LocalSearchTest, OptimalInputKeepsWeight) {
  const UnionDigraph g = two_pairs();
  const HamCycle opt = solve_exact(g);
  EXPECT_EQ(cycle_weight(improve_local_search(g, opt), g), cycle_weight(opt, g));
}

TEST(LocalSearchTest, NeverWorseNeverAboveOptimum) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const UnionDigraph g = random_digraph(rng, n, 0.2 + 0.1 * (trial % 6));
    const HamCycle start{random_permutation(rng, n)};
    const HamCycle better = improve_local_search(g, start);
    ASSERT_TRUE(is_hamiltonian(better, n));
    ASSERT_GE(cycle_weight(better, g), cycle_weight(start, g));
    ASSERT_LE(cycle_weight(better, g), brute_max_tour_weight(g));
  }
}

TEST(LocalSearchTest, ZeroBudgetIsIdentity) {
  std::mt19937_64 rng(1);
  const UnionDigraph g = random_digraph(rng, 7, 0.5);
  const HamCycle start{{3, 1, 4, 0, 5, 2, 6}};
  EXPECT_EQ(improve_local_search(g, start, 0), start);
}

TEST(EngineTest, NamesAndGuarantees) {
  EXPECT_EQ(make_engine("exact").guarantee, (Ratio{1, 1}));
  EXPECT_EQ(make_engine("cycle-cover").guarantee, (Ratio{1, 2}));
  EXPECT_EQ(make_engine("cycle-cover+ls").guarantee, (Ratio{1, 2}));
  EXPECT_FALSE(make_engine("cycle-cover").size_limit.has_value());
  EXPECT_THROW(make_engine("paluch"), InvalidInput);
}

TEST(EngineTest, EveryEngineMeetsItsGuarantee) {
  std::mt19937_64 rng(53);
  for (const char* name : {"exact", "cycle-cover", "cycle-cover+ls"}) {
    const AtspEngine engine = make_engine(name);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 7;
      const UnionDigraph g = random_digraph(rng, n, 0.1 * (1 + trial % 9));
      const HamCycle h = engine.solve(g);
      ASSERT_TRUE(is_hamiltonian(h, n));
      const int optimum = brute_max_tour_weight(g);
      ASSERT_GE(cycle_weight(h, g) * engine.guarantee.den,
                engine.guarantee.num * optimum)
          << name;
    }
  }
}

}  // namespace
}  // namespace bcpp
