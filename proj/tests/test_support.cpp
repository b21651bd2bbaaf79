#include "test_support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bcpp::testing {
namespace {

int draw(std::mt19937_64& rng, int lo, int hi, bool coarse) {
  if (coarse) {
    // Multiples of 50 inside [lo, hi].
    const int first = (lo + 49) / 50;
    const int last = hi / 50;
    if (first <= last) {
      return 50 * std::uniform_int_distribution<int>(first, last)(rng);
    }
  }
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, int n, int kind) {
  const bool coarse = std::bernoulli_distribution(0.5)(rng);
  std::vector<Chart> charts;
  for (int i = 0; i < n; ++i) {
    int a = 0;
    int b = 0;
    switch (kind) {
      case 0:
        a = draw(rng, 1, 1000, coarse);
        b = draw(rng, 1, 1000, coarse);
        break;
      case 1:
      case 2: {
        const int big = draw(rng, kind == 1 ? 501 : 500, 1000, coarse);
        const int other = draw(rng, 1, 1000, coarse);
        if (std::bernoulli_distribution(0.5)(rng)) {
          a = big, b = other;
        } else {
          a = other, b = big;
        }
        break;
      }
      case 3:
        a = draw(rng, 501, 1000, coarse);
        b = draw(rng, 1, a, coarse);
        break;
      default:
        a = draw(rng, 1, 1000, coarse);
        b = draw(rng, a, 1000, coarse);
        break;
    }
    charts.push_back({Height{a}, Height{b}});
  }
  return Instance(std::move(charts), "random");
}

UnionDigraph random_digraph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::uint8_t> w(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w[i * n + j] = coin(rng) ? 1 : 0;
    }
  }
  return UnionDigraph(n, std::move(w));
}

bool sequence_feasible(const Instance& instance, const std::vector<int>& order,
                       const std::vector<int>& levels) {
  const int cap = instance.denominator();
  std::map<int, int> load;
  int pos = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      const Chart& l = instance[order[k - 1]];
      const Chart& r = instance[order[k]];
      const int t = levels[k - 1];
      if (t == 2 && (l.a.units + r.a.units > cap || l.b.units + r.b.units > cap)) {
        return false;
      }
      if (t == 1 && l.b.units + r.a.units > cap) return false;
      pos += 2 - t;
    }
    load[pos] += instance[order[k]].a.units;
    load[pos + 1] += instance[order[k]].b.units;
  }
  return std::all_of(load.begin(), load.end(),
                     [&](const auto& kv) { return kv.second <= cap; });
}

namespace {

// Depth-first over (next chart, level of its link); loads only grow, so an
// overfull cell prunes the whole branch.
struct PackingWalk {
  const Instance& instance;
  int max_level;
  const std::function<void(const std::vector<int>&, const std::vector<int>&)>&
      visit;
  int n = instance.size();
  int cap = instance.denominator();
  std::vector<int> order;
  std::vector<int> levels;
  std::vector<int> load = std::vector<int>(2 * n + 2, 0);
  std::vector<char> used = std::vector<char>(n, 0);

  bool place(int chart, int pos) {
    load[pos] += instance[chart].a.units;
    load[pos + 1] += instance[chart].b.units;
    return load[pos] <= cap && load[pos + 1] <= cap;
  }
  void unplace(int chart, int pos) {
    load[pos] -= instance[chart].a.units;
    load[pos + 1] -= instance[chart].b.units;
  }

  void extend(int pos) {
    if (static_cast<int>(order.size()) == n) {
      visit(order, levels);
      return;
    }
    for (int chart = 0; chart < n; ++chart) {
      if (used[chart]) continue;
      used[chart] = 1;
      order.push_back(chart);
      const bool head = order.size() == 1;
      for (int t = 0; t <= (head ? 0 : max_level); ++t) {
        const int next = head ? 1 : pos + 2 - t;
        if (!head) levels.push_back(t);
        if (place(chart, next)) extend(next);
        unplace(chart, next);
        if (!head) levels.pop_back();
      }
      order.pop_back();
      used[chart] = 0;
    }
  }
};

}  // namespace

void for_each_sequence_packing(
    const Instance& instance, int max_level,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>&
        visit) {
  PackingWalk walk{instance, max_level, visit};
  walk.extend(0);
}

int brute_min_length(const Instance& instance, int max_level) {
  const int n = instance.size();
  int best = 2 * n;
  for_each_sequence_packing(
      instance, max_level,
      [&](const std::vector<int>&, const std::vector<int>& levels) {
        best = std::min(best,
                        2 * n - std::accumulate(levels.begin(), levels.end(), 0));
      });
  return best;
}

int brute_max_tour_weight(const UnionDigraph& g) {
  const int n = g.size();
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  int best = -1;
  do {
    int w = g.weight(0, rest.front()) + g.weight(rest.back(), 0);
    for (int k = 0; k + 1 < n - 1; ++k) w += g.weight(rest[k], rest[k + 1]);
    best = std::max(best, w);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

namespace {

int matching_search(const UnionGraph& g, std::vector<char>& used, int from) {
  const int n = g.size();
  while (from < n && used[from]) ++from;
  if (from >= n) return 0;
  used[from] = 1;
  int best = matching_search(g, used, from + 1);  // leave `from` unmatched
  for (int v = from + 1; v < n; ++v) {
    if (!used[v] && g.has_edge(from, v)) {
      used[v] = 1;
      best = std::max(best, 1 + matching_search(g, used, from + 1));
      used[v] = 0;
    }
  }
  used[from] = 0;
  return best;
}

}  // namespace

int brute_max_matching(const UnionGraph& g) {
  std::vector<char> used(g.size(), 0);
  return matching_search(g, used, 0);
}

int greedy_k1(const Instance& instance, const std::vector<int>& order) {
  int k1 = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    k1 += instance[order[k]].b.units + instance[order[k + 1]].a.units <=
          instance.denominator();
  }
  return k1;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace bcpp::testing
