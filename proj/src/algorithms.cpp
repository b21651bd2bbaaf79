#include "bcpp/algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "bcpp/errors.hpp"
#include "bcpp/matching.hpp"
#include "bcpp/union_graphs.hpp"

namespace bcpp {
namespace {

SequencePacking singleton_packing() { return SequencePacking{{0}, {}}; }

// Deletes chart `victim` from the sequence. Its neighbours become adjacent
// and are joined by a 1-union when one fits.
SequencePacking remove_chart(const SequencePacking& p, int victim,
                             const Instance& instance) {
  const auto it = std::find(p.order.begin(), p.order.end(), victim);
  const auto k = static_cast<std::size_t>(it - p.order.begin());
  const std::size_t n = p.order.size();
  SequencePacking out;
  out.order = p.order;
  out.order.erase(out.order.begin() + k);
  out.overlaps = p.overlaps;
  if (k == 0) {
    out.overlaps.erase(out.overlaps.begin());
  } else if (k + 1 == n) {
    out.overlaps.pop_back();
  } else {
    const Chart& left = instance[p.order[k - 1]];
    const Chart& right = instance[p.order[k + 1]];
    const int joined =
        left.b.units + right.a.units <= instance.denominator() ? 1 : 0;
    out.overlaps.erase(out.overlaps.begin() + k);
    out.overlaps[k - 1] = joined;
  }
  return out;
}

}  // namespace

SequencePacking algorithm_a1(const Instance& instance,
                             const AtspEngine& engine) {
  const int n = instance.size();
  if (n == 1) return singleton_packing();
  if (n % 2 == 0) {
    const UnionDigraph g = build_g1(instance);
    return packing_of_cycle(engine.solve(g), g, instance);
  }
  const Instance padded =
      instance.with_chart(dummy_chart(instance.denominator()));
  const UnionDigraph g = build_g1(padded);
  const SequencePacking with_dummy =
      packing_of_cycle(engine.solve(g), g, padded);
  return remove_chart(with_dummy, n, padded);
}

namespace {

// Run of three or more charts on two cells: a chart with a > D/2 goes
// first, one with b > D/2 last, one with both at the end its shorter bar
// faces.
void order_run(std::vector<int>::iterator first, std::vector<int>::iterator last,
               const Instance& instance) {
  const int cap = instance.denominator();
  auto heavy_a = [&](int c) { return 2 * instance[c].a.units > cap; };
  auto heavy_b = [&](int c) { return 2 * instance[c].b.units > cap; };
  auto rank = [&](int c) {
    const Chart& x = instance[c];
    if (heavy_a(c) && heavy_b(c)) return x.b.units <= x.a.units ? 0 : 2;
    if (heavy_a(c)) return 0;
    if (heavy_b(c)) return 2;
    return 1;
  };
  std::stable_sort(first, last, [&](int x, int y) { return rank(x) < rank(y); });
}

}  // namespace

SequencePacking gamma_transform(const SequencePacking& p,
                                const Instance& instance) {
  SequencePacking out = p;
  const std::size_t m = out.overlaps.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (out.overlaps[k] != 2) continue;
    std::size_t end = k;
    while (end < m && out.overlaps[end] == 2) ++end;
    if (end == k + 1) {
      const Chart& i = instance[out.order[k]];
      const Chart& j = instance[out.order[k + 1]];
      if (i.a.units + j.b.units < j.a.units + i.b.units) {
        std::swap(out.order[k], out.order[k + 1]);
      }
    } else {
      order_run(out.order.begin() + k, out.order.begin() + end + 1, instance);
    }
    for (std::size_t q = k; q < end; ++q) out.overlaps[q] = 1;
    k = end - 1;
  }
  return out;
}

SequencePacking algorithm_a2(const Instance& instance,
                             const AtspEngine& engine, A2Options options) {
  if (!options.allow_nonbig &&
      !classify(instance).contains(ChartClass::kNonStrictlyBig)) {
    throw InvalidInput(
        "algorithm a2 expects charts with a bar of at least half height");
  }
  if (instance.size() == 1) return singleton_packing();
  const Matching m = max_cardinality_matching(build_g2(instance));
  SequencePacking by_matching = packing_of_matching(m, instance);
  SequencePacking by_a1 = algorithm_a1(instance, engine);
  if (packing_length(by_matching) <= packing_length(by_a1)) {
    return by_matching;
  }
  return by_a1;
}

SequencePacking baseline_no_union(const Instance& instance) {
  SequencePacking p;
  p.order.resize(instance.size());
  std::iota(p.order.begin(), p.order.end(), 0);
  p.overlaps.assign(instance.size() - 1, 0);
  return p;
}

}  // namespace bcpp
