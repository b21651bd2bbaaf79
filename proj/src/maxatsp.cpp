#include "bcpp/maxatsp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "bcpp/errors.hpp"

namespace bcpp {
namespace {

// Suffix table for tours that start at vertex 0. A subset of the other
// vertices is a bitmask m over vertices 1..n-1 (bit v-1 for vertex v);
// best(m, v) is the largest weight of a path that starts at v, visits every
// vertex outside {0} + m and returns to 0.
class SuffixTable {
 public:
  explicit SuffixTable(const UnionDigraph& g)
      : g_(g),
        n_(g.size()),
        full_((std::uint32_t{1} << (n_ - 1)) - 1),
        table_(static_cast<std::size_t>(full_ + 1) * n_, -1) {}

  std::uint32_t full() const { return full_; }

  int best(std::uint32_t m, int v) const { return table_[index(m, v)]; }

  void fill_entry(std::uint32_t m, int v) {
    if (m == full_) {
      table_[index(m, v)] = static_cast<std::int8_t>(g_.weight(v, 0));
      return;
    }
    int value = -1;
    for (int u = 1; u < n_; ++u) {
      const std::uint32_t bit = std::uint32_t{1} << (u - 1);
      if (m & bit) continue;
      value = std::max(value, g_.weight(v, u) + best(m | bit, u));
    }
    table_[index(m, v)] = static_cast<std::int8_t>(value);
  }

  void fill_mask(std::uint32_t m) {
    if (m == 0) {
      fill_entry(0, 0);
      return;
    }
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      fill_entry(m, std::countr_zero(rest) + 1);
    }
  }

  HamCycle reconstruct() const {
    HamCycle h;
    h.tour.push_back(0);
    std::uint32_t m = 0;
    int v = 0;
    while (m != full_) {
      for (int u = 1; u < n_; ++u) {
        const std::uint32_t bit = std::uint32_t{1} << (u - 1);
        if (m & bit) continue;
        if (g_.weight(v, u) + best(m | bit, u) == best(m, v)) {
          m |= bit;
          v = u;
          h.tour.push_back(u);
          break;
        }
      }
    }
    return h;
  }

 private:
  std::size_t index(std::uint32_t m, int v) const {
    return static_cast<std::size_t>(m) * n_ + v;
  }

  const UnionDigraph& g_;
  int n_;
  std::uint32_t full_;
  std::vector<std::int8_t> table_;
};

void check_exact_size(const UnionDigraph& g) {
  if (g.size() < 2) throw InvalidInput("a tour needs at least two vertices");
  if (g.size() > kExactSizeLimit) {
    throw SizeLimitExceeded("exact MaxATSP solver supports at most " +
                            std::to_string(kExactSizeLimit) + " vertices");
  }
}

}  // namespace

HamCycle solve_exact_serial(const UnionDigraph& g) {
  check_exact_size(g);
  SuffixTable table(g);
  // Every successor subset m | bit is numerically larger than m.
  for (std::int64_t m = table.full(); m >= 0; --m) {
    table.fill_mask(static_cast<std::uint32_t>(m));
  }
  return table.reconstruct();
}

HamCycle solve_exact(const UnionDigraph& g) {
  check_exact_size(g);
  SuffixTable table(g);
  const int layers = g.size() - 1;
  std::vector<std::vector<std::uint32_t>> by_popcount(layers + 1);
  for (std::uint32_t m = 0; m <= table.full(); ++m) {
    by_popcount[std::popcount(m)].push_back(m);
  }
  for (int k = layers; k >= 0; --k) {
    const auto& masks = by_popcount[k];
    const auto count = static_cast<std::int64_t>(masks.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) table.fill_mask(masks[i]);
  }
  return table.reconstruct();
}

std::vector<int> max_weight_cycle_cover(const UnionDigraph& g) {
  const int n = g.size();
  if (n < 2) throw InvalidInput("a cycle cover needs at least two vertices");
  // Hungarian method (potentials + shortest augmenting paths) minimising
  // -weight; self loops are priced out.
  const long long forbidden = 4LL * n + 4;
  auto cost = [&](int i, int j) -> long long {
    return i == j ? forbidden : -static_cast<long long>(g.weight(i, j));
  };
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    p[0] = row;
    int j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      long long delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> succ(n, -1);
  for (int j = 1; j <= n; ++j) succ[p[j] - 1] = j - 1;
  return succ;
}

HamCycle solve_cycle_cover(const UnionDigraph& g) {
  const int n = g.size();
  const std::vector<int> succ = max_weight_cycle_cover(g);
  std::vector<char> seen(n, 0);
  HamCycle h;
  // Scanning vertices upward meets each cycle first at its lowest vertex.
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = succ[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    if (static_cast<int>(cycle.size()) == n) return HamCycle{cycle};
    std::size_t cut = 0;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int wk = g.weight(cycle[k], succ[cycle[k]]);
      const int wc = g.weight(cycle[cut], succ[cycle[cut]]);
      if (wk < wc || (wk == wc && cycle[k] < cycle[cut])) cut = k;
    }
    // Drop arc cycle[cut] -> succ: the path runs from succ around to cycle[cut].
    for (std::size_t k = 1; k <= cycle.size(); ++k) {
      h.tour.push_back(cycle[(cut + k) % cycle.size()]);
    }
  }
  return h;
}

HamCycle improve_local_search(const UnionDigraph& g, HamCycle h,
                              int budget) {
  const int n = g.size();
  if (!is_hamiltonian(h, n)) throw InvalidInput("not a Hamiltonian cycle");
  std::vector<int>& t = h.tour;
  auto at = [&](int k) { return t[((k % n) + n) % n]; };

  auto try_reversal = [&]() -> bool {
    for (int i = 1; i + 1 < n; ++i) {
      int forward = 0;
      int backward = 0;
      for (int j = i + 1; j < n; ++j) {
        forward += g.weight(t[j - 1], t[j]);
        backward += g.weight(t[j], t[j - 1]);
        const int before = g.weight(t[i - 1], t[i]) + forward +
                           g.weight(t[j], at(j + 1));
        const int after = g.weight(t[i - 1], t[j]) + backward +
                          g.weight(t[i], at(j + 1));
        if (after > before) {
          std::reverse(t.begin() + i, t.begin() + j + 1);
          return true;
        }
      }
    }
    return false;
  };

  auto try_reinsertion = [&]() -> bool {
    if (n < 4) return false;
    for (int i = 0; i < n; ++i) {
      const int x = t[i];
      const int prev = at(i - 1);
      const int next = at(i + 1);
      const int removal =
          g.weight(prev, x) + g.weight(x, next) - g.weight(prev, next);
      // Gaps (t[k], t[k+1]) of the tour without x.
      for (int k = i + 1; k < i + n - 1; ++k) {
        const int a = at(k);
        const int b = at(k + 1);
        const int gain = g.weight(a, x) + g.weight(x, b) - g.weight(a, b);
        if (gain > removal) {
          std::vector<int> next_tour;
          next_tour.reserve(n);
          for (int s = i + 1; s <= k; ++s) next_tour.push_back(at(s));
          next_tour.push_back(x);
          for (int s = k + 1; s < i + n; ++s) next_tour.push_back(at(s));
          t = std::move(next_tour);
          return true;
        }
      }
    }
    return false;
  };

  for (int step = 0; step < budget; ++step) {
    if (!try_reversal() && !try_reinsertion()) break;
  }
  return h;
}

HamCycle AtspEngine::solve(const UnionDigraph& g) const {
  if (size_limit && g.size() > *size_limit) {
    throw SizeLimitExceeded("engine '" + name + "' supports at most " +
                            std::to_string(*size_limit) + " vertices");
  }
  return run(g);
}

AtspEngine make_engine(std::string_view name) {
  if (name == "exact") {
    return {"exact", {1, 1}, kExactSizeLimit,
            [](const UnionDigraph& g) { return solve_exact(g); }};
  }
  if (name == "cycle-cover") {
    return {"cycle-cover", {1, 2}, std::nullopt,
            [](const UnionDigraph& g) { return solve_cycle_cover(g); }};
  }
  if (name == "cycle-cover+ls") {
    return {"cycle-cover+ls", {1, 2}, std::nullopt,
            [](const UnionDigraph& g) {
              return improve_local_search(g, solve_cycle_cover(g));
            }};
  }
  throw InvalidInput("unknown engine '" + std::string(name) + "'");
}

}  // namespace bcpp
