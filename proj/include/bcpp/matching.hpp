#pragma once

#include <utility>
#include <vector>

#include "bcpp/model.hpp"
#include "bcpp/union_graphs.hpp"

namespace bcpp {

struct Matching {
  // Each pair is (lower, higher); pairs sorted ascending.
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

// Edmonds' blossom algorithm, O(n^3).
Matching max_cardinality_matching(const UnionGraph& g);

// Matched pairs become 2-unions, unmatched charts stand alone, and units are
// joined by 0-unions in ascending order of their lowest chart index.
// Throws InvalidInput if a pair cannot form a 2-union.
SequencePacking packing_of_matching(const Matching& m,
                                    const Instance& instance);

}  // namespace bcpp
