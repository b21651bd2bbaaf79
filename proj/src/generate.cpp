#include "bcpp/generate.hpp"

#include <random>
#include <sstream>

#include "bcpp/errors.hpp"

namespace bcpp {

std::set<ChartClass> parse_class_list(std::string_view text) {
  std::set<ChartClass> classes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    classes.insert(parse_chart_class(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return classes;
}

std::string format_class_list(const std::set<ChartClass>& classes) {
  std::string out;
  for (const ChartClass c : classes) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Instance generate(int n, const std::set<ChartClass>& classes,
                  std::uint64_t seed, int denominator, std::string name) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (denominator < 2) throw InvalidInput("denominator must be at least 2");
  if (classes.contains(ChartClass::kArbitrary) && classes.size() > 1) {
    throw InvalidInput("'arbitrary' cannot be combined with other classes");
  }
  const bool nonincreasing = classes.contains(ChartClass::kMonotoneNonincreasing);
  const bool nondecreasing = classes.contains(ChartClass::kMonotoneNondecreasing);
  if (nonincreasing && nondecreasing) {
    throw InvalidInput("monotone classes are mutually exclusive");
  }

  int low = 1;
  if (classes.contains(ChartClass::kBig)) {
    low = denominator / 2 + 1;
  } else if (classes.contains(ChartClass::kNonStrictlyBig)) {
    low = (denominator + 1) / 2;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> large(low, denominator);
  std::uniform_int_distribution<int> any(1, denominator);
  std::bernoulli_distribution coin(0.5);
  std::vector<Chart> charts;
  charts.reserve(n);
  for (int i = 0; i < n; ++i) {
    int x = large(rng);
    int y = any(rng);
    if (nonincreasing) {
      if (x < y) std::swap(x, y);
    } else if (nondecreasing) {
      if (x > y) std::swap(x, y);
    } else if (coin(rng)) {
      std::swap(x, y);
    }
    charts.push_back({Height{x}, Height{y}});
  }
  if (name.empty()) {
    std::ostringstream label;
    label << "n" << n << "-" << format_class_list(classes) << "-s" << seed;
    name = label.str();
  }
  return Instance(std::move(charts), std::move(name), denominator);
}

}  // namespace bcpp
