#include "bcpp/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bcpp/errors.hpp"

namespace bcpp {

Instance::Instance(std::vector<Chart> charts, std::string name,
                   int denominator)
    : charts_(std::move(charts)),
      name_(std::move(name)),
      denominator_(denominator) {
  if (denominator_ < 1) {
    throw InvalidInput("denominator must be positive");
  }
  if (charts_.empty()) {
    throw InvalidInput("an instance needs at least one chart");
  }
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    for (const Height h : {charts_[i].a, charts_[i].b}) {
      if (h.units <= 0 || h.units > denominator_) {
        std::ostringstream msg;
        msg << "chart " << i << ": bar height " << h.units
            << " outside (0, " << denominator_ << "]";
        throw InvalidInput(msg.str());
      }
    }
  }
}

Instance Instance::with_chart(Chart extra) const {
  std::vector<Chart> charts = charts_;
  charts.push_back(extra);
  return Instance(std::move(charts), name_, denominator_);
}

Instance make_instance(std::initializer_list<std::pair<int, int>> heights,
                       std::string name, int denominator) {
  std::vector<Chart> charts;
  charts.reserve(heights.size());
  for (const auto& [a, b] : heights) {
    charts.push_back({Height{a}, Height{b}});
  }
  return Instance(std::move(charts), std::move(name), denominator);
}

namespace {

constexpr std::pair<ChartClass, std::string_view> kClassNames[] = {
    {ChartClass::kArbitrary, "arbitrary"},
    {ChartClass::kBig, "big"},
    {ChartClass::kNonStrictlyBig, "non-strictly-big"},
    {ChartClass::kMonotoneNonincreasing, "monotone-nonincreasing"},
    {ChartClass::kMonotoneNondecreasing, "monotone-nondecreasing"},
};

}  // namespace

std::string_view to_string(ChartClass c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "unknown";
}

ChartClass parse_chart_class(std::string_view name) {
  for (const auto& [cls, known] : kClassNames) {
    if (known == name) return cls;
  }
  throw InvalidInput("unknown chart class '" + std::string(name) + "'");
}

int union_level(const Chart& left, const Chart& right, int capacity) {
  if (left.a.units + right.a.units <= capacity &&
      left.b.units + right.b.units <= capacity) {
    return 2;
  }
  if (left.b.units + right.a.units <= capacity) return 1;
  return 0;
}

int packing_length(const CellPacking& p) {
  std::vector<int> cells;
  cells.reserve(2 * p.positions.size());
  for (const int pos : p.positions) {
    cells.push_back(pos);
    cells.push_back(pos + 1);
  }
  std::sort(cells.begin(), cells.end());
  return static_cast<int>(std::unique(cells.begin(), cells.end()) -
                          cells.begin());
}

int packing_length(const SequencePacking& p) {
  const int n = static_cast<int>(p.order.size());
  return 2 * n - std::accumulate(p.overlaps.begin(), p.overlaps.end(), 0);
}

CellPacking to_cell_packing(const SequencePacking& p) {
  CellPacking cells;
  cells.positions.assign(p.order.size(), 0);
  int pos = 1;
  for (std::size_t k = 0; k < p.order.size(); ++k) {
    if (k > 0) pos += 2 - p.overlaps[k - 1];
    cells.positions[p.order[k]] = pos;
  }
  return cells;
}

SequencePacking to_sequence_packing(const CellPacking& p) {
  const int n = static_cast<int>(p.positions.size());
  SequencePacking seq;
  seq.order.resize(n);
  std::iota(seq.order.begin(), seq.order.end(), 0);
  std::stable_sort(seq.order.begin(), seq.order.end(), [&](int x, int y) {
    return p.positions[x] < p.positions[y];
  });
  for (int k = 0; k + 1 < n; ++k) {
    const int step = p.positions[seq.order[k + 1]] - p.positions[seq.order[k]];
    if (step > 2) {
      throw InvalidInput("packing has an empty cell; normalize it first");
    }
    seq.overlaps.push_back(2 - step);
  }
  return seq;
}

std::string ValidationResult::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const Violation& v : violations) {
    switch (v.kind) {
      case Violation::Kind::kOverfullCell:
        out << "cell " << v.where << " overfull (" << v.value << ")";
        break;
      case Violation::Kind::kBadPosition:
        out << "chart " << v.where << " at invalid cell " << v.value;
        break;
      case Violation::Kind::kMalformed:
        out << "malformed packing";
        break;
      case Violation::Kind::kInfeasibleUnion:
        out << "pair " << v.where << " cannot form a " << v.value << "-union";
        break;
    }
    out << "; ";
  }
  std::string text = out.str();
  text.resize(text.size() - 2);
  return text;
}

ValidationResult validate(const Instance& instance, const CellPacking& p) {
  ValidationResult result;
  if (static_cast<int>(p.positions.size()) != instance.size()) {
    result.violations.push_back({Violation::Kind::kMalformed});
    return result;
  }
  std::map<int, int> load;
  for (int i = 0; i < instance.size(); ++i) {
    const int pos = p.positions[i];
    if (pos < 1) {
      result.violations.push_back({Violation::Kind::kBadPosition, i, pos});
      continue;
    }
    load[pos] += instance[i].a.units;
    load[pos + 1] += instance[i].b.units;
  }
  for (const auto& [cell, total] : load) {
    if (total > instance.denominator()) {
      result.violations.push_back(
          {Violation::Kind::kOverfullCell, cell, total});
    }
  }
  return result;
}

ValidationResult validate(const Instance& instance, const SequencePacking& p) {
  ValidationResult result;
  const int n = instance.size();
  bool shape_ok = static_cast<int>(p.order.size()) == n &&
                  static_cast<int>(p.overlaps.size()) == n - 1;
  if (shape_ok) {
    std::vector<char> seen(n, 0);
    for (const int c : p.order) {
      if (c < 0 || c >= n || seen[c]) {
        shape_ok = false;
        break;
      }
      seen[c] = 1;
    }
  }
  if (!shape_ok) {
    result.violations.push_back({Violation::Kind::kMalformed});
    return result;
  }
  for (int k = 0; k + 1 < n; ++k) {
    const int t = p.overlaps[k];
    if (t < 0 || t > 2 ||
        t > union_level(instance[p.order[k]], instance[p.order[k + 1]],
                        instance.denominator())) {
      result.violations.push_back({Violation::Kind::kInfeasibleUnion, k, t});
    }
  }
  if (!result.ok()) return result;
  return validate(instance, to_cell_packing(p));
}

CellPacking normalize(const CellPacking& p) {
  std::vector<int> occupied;
  for (const int pos : p.positions) {
    occupied.push_back(pos);
    occupied.push_back(pos + 1);
  }
  std::sort(occupied.begin(), occupied.end());
  occupied.erase(std::unique(occupied.begin(), occupied.end()),
                 occupied.end());
  // A chart never spans an empty cell, so its new cell is its rank among
  // the occupied cells.
  CellPacking out;
  out.positions.reserve(p.positions.size());
  for (const int pos : p.positions) {
    const auto rank =
        std::lower_bound(occupied.begin(), occupied.end(), pos) -
        occupied.begin();
    out.positions.push_back(static_cast<int>(rank) + 1);
  }
  return out;
}

UnionCounts count_unions(const SequencePacking& p) {
  UnionCounts counts;
  for (const int t : p.overlaps) {
    if (t == 0) ++counts.k0;
    if (t == 1) ++counts.k1;
    if (t == 2) ++counts.k2;
  }
  return counts;
}

std::set<ChartClass> classify(const Instance& instance) {
  const int cap = instance.denominator();
  bool big = true;
  bool non_strictly_big = true;
  bool nonincreasing = true;
  bool nondecreasing = true;
  for (const Chart& c : instance.charts()) {
    const int hi = std::max(c.a.units, c.b.units);
    big = big && 2 * hi > cap;
    non_strictly_big = non_strictly_big && 2 * hi >= cap;
    nonincreasing = nonincreasing && c.a >= c.b;
    nondecreasing = nondecreasing && c.a <= c.b;
  }
  std::set<ChartClass> tags;
  if (big) tags.insert(ChartClass::kBig);
  if (non_strictly_big) tags.insert(ChartClass::kNonStrictlyBig);
  if (nonincreasing) tags.insert(ChartClass::kMonotoneNonincreasing);
  if (nondecreasing) tags.insert(ChartClass::kMonotoneNondecreasing);
  if (tags.empty()) tags.insert(ChartClass::kArbitrary);
  return tags;
}

}  // namespace bcpp
