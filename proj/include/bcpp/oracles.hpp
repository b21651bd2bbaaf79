#pragma once

// Exact reference solvers. Each enforces a size limit and breaks ties
// toward the lexicographically smallest optimal left-to-right order.

#include <cstdint>

#include "bcpp/model.hpp"

namespace bcpp {

inline constexpr int kBcpp1OracleLimit = 18;
inline constexpr int kBcpp1BruteForceLimit = 8;
inline constexpr int kSequenceOracleLimit = 18;
inline constexpr std::size_t kSequenceOracleStates = 20000000;
inline constexpr int kGeneralOracleLimit = 5;

struct OracleResult {
  int optimum_length = 0;
  SequencePacking packing;
  CellPacking cells;
  int k1 = 0;
  int k2 = 0;
  std::uint64_t explored = 0;  // DP states or enumerated candidates
};

// Best packing using only 0- and 1-unions, from the exact MaxATSP(0,1)
// optimum on the (padded) union digraph.
OracleResult oracle_bcpp1(const Instance& instance);

// Same optimum by trying all n! orders with every feasible 1-union taken.
// Parallel over the first chart of the order.
OracleResult oracle_bcpp1_bruteforce(const Instance& instance);
OracleResult oracle_bcpp1_bruteforce_serial(const Instance& instance);

// Best sequence packing with any mix of 0-, 1- and 2-unions. Memoised
// search over (placed charts, loads of the two rightmost cells); every
// feasible level is tried. Throws SizeLimitExceeded past
// kSequenceOracleStates states, which small charts can reach well below
// the chart limit.
OracleResult oracle_sequence(const Instance& instance);

// Best packing over every assignment of start cells, by branch and bound.
// Parallel over the start cell of chart 0.
OracleResult oracle_general(const Instance& instance);
OracleResult oracle_general_serial(const Instance& instance);

}  // namespace bcpp
