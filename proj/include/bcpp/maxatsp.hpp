#pragma once

// Solvers for the maximum-weight Hamiltonian cycle in a complete digraph
// with 0/1 arc weights.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcpp/union_graphs.hpp"

namespace bcpp {

struct Ratio {
  int num = 1;
  int den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline constexpr int kExactSizeLimit = 20;
inline constexpr int kDefaultLocalSearchBudget = 100000;

// Held-Karp style subset DP, O(2^n n^2). Returns the lexicographically
// smallest optimal tour starting at vertex 0. Subset layers run in parallel.
HamCycle solve_exact(const UnionDigraph& g);
// Single-threaded reference for solve_exact; same result.
HamCycle solve_exact_serial(const UnionDigraph& g);

// Maximum-weight cycle cover as a successor array (succ[v] != v), from a
// Hungarian-method assignment over the n x n successor table.
std::vector<int> max_weight_cycle_cover(const UnionDigraph& g);

// Patches the cycle cover into one tour: the cycles are taken in ascending
// order of their lowest vertex and each loses one lightest arc. Each cycle
// has at least two arcs, so at least half the cover weight survives.
HamCycle solve_cycle_cover(const UnionDigraph& g);

// First-improvement hill climbing with segment reversal and single-vertex
// reinsertion moves. `budget` caps the number of applied moves.
HamCycle improve_local_search(const UnionDigraph& g, HamCycle h,
                              int budget = kDefaultLocalSearchBudget);

// A named MaxATSP(0,1) solver with its declared approximation factor.
struct AtspEngine {
  std::string name;
  Ratio guarantee;
  std::optional<int> size_limit;
  std::function<HamCycle(const UnionDigraph&)> run;

  // Throws SizeLimitExceeded above size_limit.
  HamCycle solve(const UnionDigraph& g) const;
};

// "exact", "cycle-cover" or "cycle-cover+ls"; throws InvalidInput otherwise.
AtspEngine make_engine(std::string_view name);

}  // namespace bcpp
