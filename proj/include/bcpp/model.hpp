#pragma once

// Domain model for packing two-bar charts into a unit-height strip.
//
// Heights are exact integers in units of 1/denominator of the strip height
// (default 1/1000). A chart occupies two adjacent cells; a packing is
// feasible when no cell holds more than `denominator` units.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcpp {

inline constexpr int kDefaultDenominator = 1000;

struct Height {
  std::int32_t units = 0;

  friend constexpr auto operator<=>(Height, Height) = default;
};

struct Chart {
  Height a;  // left bar
  Height b;  // right bar

  friend constexpr bool operator==(const Chart&, const Chart&) = default;
};

// An ordered, non-empty set of charts. Chart identities are the indices
// 0..size()-1. Every bar height lies in (0, denominator].
class Instance {
 public:
  Instance(std::vector<Chart> charts, std::string name = {},
           int denominator = kDefaultDenominator);

  int size() const { return static_cast<int>(charts_.size()); }
  const Chart& operator[](int i) const { return charts_[i]; }
  std::span<const Chart> charts() const { return charts_; }
  const std::string& name() const { return name_; }
  int denominator() const { return denominator_; }

  // Copy of this instance with one more chart appended at index size().
  Instance with_chart(Chart extra) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Chart> charts_;
  std::string name_;
  int denominator_;
};

// Convenience for tests and examples: charts given as (a, b) unit pairs.
Instance make_instance(std::initializer_list<std::pair<int, int>> heights,
                       std::string name = {},
                       int denominator = kDefaultDenominator);

// p(i) for every chart i; chart i covers cells p(i) and p(i)+1, cells are
// numbered from 1.
struct CellPacking {
  std::vector<int> positions;

  friend bool operator==(const CellPacking&, const CellPacking&) = default;
};

// Charts listed left to right; overlaps[k] is the union level t in {0,1,2}
// used between order[k] and order[k+1]. Chart order[k+1] starts
// 2 - overlaps[k] cells to the right of order[k].
struct SequencePacking {
  std::vector<int> order;
  std::vector<int> overlaps;

  friend bool operator==(const SequencePacking&,
                         const SequencePacking&) = default;
};

struct UnionCounts {
  int k0 = 0;
  int k1 = 0;
  int k2 = 0;

  friend bool operator==(const UnionCounts&, const UnionCounts&) = default;
};

enum class ChartClass {
  kArbitrary,
  kBig,
  kNonStrictlyBig,
  kMonotoneNonincreasing,
  kMonotoneNondecreasing,
};

std::string_view to_string(ChartClass c);
// Throws InvalidInput on an unknown name.
ChartClass parse_chart_class(std::string_view name);

// Highest t such that `left` followed by `right` fits in 4 - t cells:
// 2 when both rows fit side by side, else 1 when b_left + a_right fits,
// else 0.
int union_level(const Chart& left, const Chart& right,
                int capacity = kDefaultDenominator);

int packing_length(const CellPacking& p);
int packing_length(const SequencePacking& p);

CellPacking to_cell_packing(const SequencePacking& p);

// Reads a normalized cell packing left to right (ties by chart index).
// Throws InvalidInput if two consecutive charts are more than two cells
// apart.
SequencePacking to_sequence_packing(const CellPacking& p);

struct Violation {
  enum class Kind {
    kOverfullCell,     // where = cell, value = total height
    kBadPosition,      // where = chart, value = position
    kMalformed,        // shape mismatch or not a permutation
    kInfeasibleUnion,  // where = index of the pair, value = declared level
  };
  Kind kind;
  int where = 0;
  int value = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

ValidationResult validate(const Instance& instance, const CellPacking& p);
// Checks the permutation, each declared level against union_level, and the
// induced cell loads.
ValidationResult validate(const Instance& instance, const SequencePacking& p);

// Closes every empty cell below the rightmost occupied one by shifting the
// charts to its right one cell left, and starts the packing at cell 1.
CellPacking normalize(const CellPacking& p);

UnionCounts count_unions(const SequencePacking& p);

// Every class whose predicate holds for all charts; kArbitrary only when no
// other class applies.
std::set<ChartClass> classify(const Instance& instance);

}  // namespace bcpp
