#pragma once

#include "bcpp/maxatsp.hpp"
#include "bcpp/model.hpp"

namespace bcpp {

// The padding chart added when the instance has an odd number of charts.
// Both bars are full height, so it never joins a 1- or 2-union.
inline Chart dummy_chart(int denominator) {
  return {Height{denominator}, Height{denominator}};
}

// Packing restricted to 0- and 1-unions via MaxATSP(0,1) on the union
// digraph (padded to an even vertex count). With an engine of guarantee
// alpha the number of 1-unions is at least alpha times the best possible.
SequencePacking algorithm_a1(const Instance& instance,
                             const AtspEngine& engine);

// Rewrites every 2-union (i, j) as a 1-union, putting first whichever of the
// two orientations has the lighter shared cell; ties keep (i, j). A run of
// 2-unions (three or more charts sharing two cells) becomes a run of
// 1-unions with the tall-left-bar chart first and the tall-right-bar chart
// last.
SequencePacking gamma_transform(const SequencePacking& p,
                                const Instance& instance);

struct A2Options {
  // Run on charts that are not non-strictly big. The output is still a
  // valid packing but the ratio bound no longer applies.
  bool allow_nonbig = false;
};

// Shorter of the max-cardinality matching packing and the A1 packing;
// ties go to the matching packing.
SequencePacking algorithm_a2(const Instance& instance,
                             const AtspEngine& engine,
                             A2Options options = {});

// Identity order, no unions; length 2n.
SequencePacking baseline_no_union(const Instance& instance);

}  // namespace bcpp
