#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "bcpp/model.hpp"

namespace bcpp {

// Comma-separated class names, e.g. "big,monotone-nonincreasing".
std::set<ChartClass> parse_class_list(std::string_view text);
std::string format_class_list(const std::set<ChartClass>& classes);

// Seeded random instance whose charts all satisfy `classes`.
//
// One bar is drawn from the size class range (big: (D/2, D], non-strictly
// big: [D/2, D], otherwise [1, D]) and the other from [1, D]. Monotone
// classes put the larger value on the required side; otherwise a coin flip
// decides which bar is which. Rejects `arbitrary` combined with another
// class and the two monotone classes together.
Instance generate(int n, const std::set<ChartClass>& classes,
                  std::uint64_t seed, int denominator = kDefaultDenominator,
                  std::string name = {});

// SplitMix64 step; used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace bcpp
