#include "bcpp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "bcpp/algorithms.hpp"
#include "bcpp/errors.hpp"
#include "bcpp/maxatsp.hpp"
#include "bcpp/union_graphs.hpp"

namespace bcpp {
namespace {

void check_limit(const Instance& instance, int limit, const char* oracle) {
  if (instance.size() > limit) {
    throw SizeLimitExceeded(std::string(oracle) + " oracle supports at most " +
                            std::to_string(limit) + " charts");
  }
}

OracleResult finish(SequencePacking packing, std::uint64_t explored) {
  OracleResult r;
  r.optimum_length = packing_length(packing);
  const UnionCounts counts = count_unions(packing);
  r.k1 = counts.k1;
  r.k2 = counts.k2;
  r.cells = to_cell_packing(packing);
  r.packing = std::move(packing);
  r.explored = explored;
  return r;
}

// Greedy 1-unions along a fixed order.
SequencePacking chain_of_order(const std::vector<int>& order,
                               const Instance& instance) {
  SequencePacking p;
  p.order = order;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    p.overlaps.push_back(instance[order[k]].b.units +
                                     instance[order[k + 1]].a.units <=
                                 instance.denominator()
                             ? 1
                             : 0);
  }
  return p;
}

struct OrderSearch {
  int best_k1 = -1;
  std::vector<int> best_order;
  std::uint64_t explored = 0;
};

// All orders that start with `first`, in lexicographic order.
OrderSearch search_orders_from(int first, const Instance& instance) {
  const int n = instance.size();
  const int cap = instance.denominator();
  std::vector<int> order;
  order.push_back(first);
  for (int i = 0; i < n; ++i) {
    if (i != first) order.push_back(i);
  }
  OrderSearch s;
  do {
    ++s.explored;
    int k1 = 0;
    for (int k = 0; k + 1 < n; ++k) {
      k1 += instance[order[k]].b.units + instance[order[k + 1]].a.units <= cap;
    }
    if (k1 > s.best_k1) {
      s.best_k1 = k1;
      s.best_order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return s;
}

OracleResult reduce_order_searches(const std::vector<OrderSearch>& parts,
                                   const Instance& instance) {
  std::size_t best = 0;
  std::uint64_t explored = 0;
  for (std::size_t f = 0; f < parts.size(); ++f) {
    explored += parts[f].explored;
    if (parts[f].best_k1 > parts[best].best_k1) best = f;
  }
  return finish(chain_of_order(parts[best].best_order, instance), explored);
}

// State: charts placed and the loads of the last two cells, which is all
// the next chart can see. Identical charts are placed in index order.
class SequenceSearch {
 public:
  explicit SequenceSearch(const Instance& instance)
      : instance_(instance),
        n_(instance.size()),
        cap_(instance.denominator()),
        earlier_twin_(n_, 0) {
    for (int z = 0; z < n_; ++z) {
      for (int y = z - 1; y >= 0; --y) {
        if (instance[y] == instance[z]) {
          earlier_twin_[z] = bit(y);
          break;
        }
      }
    }
  }

  SequencePacking solve() {
    int best = -1;
    int first = 0;
    for (int z = 0; z < n_; ++z) {
      if (earlier_twin_[z] != 0) continue;
      const int value = gain(close(start(z)));
      if (value > best) {
        best = value;
        first = z;
      }
    }
    SequencePacking p;
    p.order.push_back(first);
    State s = close(start(first));
    while (static_cast<int>(p.order.size()) < n_) {
      const int target = gain(s);
      const Step step = next_step(s, target);
      p.order.push_back(step.chart);
      p.overlaps.push_back(step.level);
      s = step.next;
    }
    return p;
  }

  std::uint64_t states() const { return memo_.size(); }

 private:
  struct State {
    std::uint32_t placed;
    int left;   // load of the rightmost start cell
    int right;  // load of the cell after it
    bool operator==(const State&) const = default;
  };

  struct StateHash {
    std::size_t operator()(const State& s) const {
      const std::uint64_t x =
          (std::uint64_t{s.placed} << 32 | static_cast<std::uint32_t>(s.left)) *
          0x9e3779b97f4a7c15ull;
      return x ^ (static_cast<std::uint64_t>(s.right) * 0xc2b2ae3d27d4eb4full);
    }
  };

  struct Step {
    int chart;
    int level;
    State next;
  };

  static std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

  State start(int z) const {
    return {bit(z), instance_[z].a.units, instance_[z].b.units};
  }

  // Loads no remaining chart can use are set to the capacity, so states
  // that differ only there coincide.
  State close(State s) const {
    bool stack = false;
    bool follow = false;
    for (int z = 0; z < n_; ++z) {
      if (s.placed & bit(z)) continue;
      const Chart& c = instance_[z];
      stack = stack || (s.left + c.a.units <= cap_ && s.right + c.b.units <= cap_);
      follow = follow || s.right + c.a.units <= cap_;
    }
    if (!stack) {
      s.left = cap_;
      if (!follow) s.right = cap_;
    }
    return s;
  }

  // Every feasible (chart, level) to append, charts ascending and the
  // higher level first.
  template <typename Visit>
  void for_each_option(const State& s, Visit&& visit) {
    for (int z = 0; z < n_; ++z) {
      if (s.placed & bit(z)) continue;
      if ((s.placed & earlier_twin_[z]) != earlier_twin_[z]) continue;
      const Chart& c = instance_[z];
      const std::uint32_t placed = s.placed | bit(z);
      if (s.left + c.a.units <= cap_ && s.right + c.b.units <= cap_) {
        if (visit(z, 2, close({placed, s.left + c.a.units, s.right + c.b.units}))) {
          return;
        }
      }
      if (s.right + c.a.units <= cap_) {
        if (visit(z, 1, close({placed, s.right + c.a.units, c.b.units}))) return;
      }
      if (visit(z, 0, close({placed, c.a.units, c.b.units}))) return;
    }
  }

  // Largest total overlap still obtainable.
  int gain(const State& s) {
    if (std::popcount(s.placed) == n_) return 0;
    if (const auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (memo_.size() >= kSequenceOracleStates) {
      throw SizeLimitExceeded("sequence oracle exceeded " +
                              std::to_string(kSequenceOracleStates) + " states");
    }
    int best = 0;
    for_each_option(s, [&](int, int level, const State& next) {
      best = std::max(best, level + gain(next));
      return false;
    });
    memo_.emplace(s, best);
    return best;
  }

  Step next_step(const State& s, int target) {
    Step step{-1, 0, s};
    for_each_option(s, [&](int z, int level, const State& next) {
      if (level + gain(next) != target) return false;
      step = {z, level, next};
      return true;
    });
    return step;
  }

  const Instance& instance_;
  int n_;
  int cap_;
  std::vector<std::uint32_t> earlier_twin_;
  std::unordered_map<State, int, StateHash> memo_;
};

class CellSearch {
 public:
  explicit CellSearch(const Instance& instance)
      : instance_(instance),
        n_(instance.size()),
        cap_(instance.denominator()),
        load_(2 * n_ + 2, 0),
        cover_(2 * n_ + 2, 0),
        positions_(n_, 0),
        best_length_(2 * n_ + 1) {}

  void run_all() {
    for (int p0 = 1; p0 <= max_start(); ++p0) run_from(p0);
  }

  void run_from(int p0) {
    place(0, p0);
    descend(1);
    lift(0, p0);
  }

  int best_length() const { return best_length_; }
  const std::vector<int>& best_positions() const { return best_positions_; }
  std::uint64_t explored() const { return explored_; }
  int max_start() const { return 2 * n_ - 1; }

 private:
  void place(int i, int p) {
    load_[p] += instance_[i].a.units;
    load_[p + 1] += instance_[i].b.units;
    occupied_ += (cover_[p]++ == 0) + (cover_[p + 1]++ == 0);
    positions_[i] = p;
  }

  void lift(int i, int p) {
    load_[p] -= instance_[i].a.units;
    load_[p + 1] -= instance_[i].b.units;
    occupied_ -= (--cover_[p] == 0) + (--cover_[p + 1] == 0);
  }

  void descend(int i) {
    ++explored_;
    if (occupied_ >= best_length_) return;
    if (i == n_) {
      best_length_ = occupied_;
      best_positions_ = positions_;
      return;
    }
    const Chart& c = instance_[i];
    for (int p = 1; p <= max_start(); ++p) {
      if (load_[p] + c.a.units > cap_ || load_[p + 1] + c.b.units > cap_) {
        continue;
      }
      place(i, p);
      descend(i + 1);
      lift(i, p);
    }
  }

  const Instance& instance_;
  int n_;
  int cap_;
  std::vector<int> load_;
  std::vector<int> cover_;
  std::vector<int> positions_;
  std::vector<int> best_positions_;
  int occupied_ = 0;
  int best_length_;
  std::uint64_t explored_ = 0;
};

OracleResult finish_cells(const std::vector<int>& positions,
                          std::uint64_t explored) {
  const CellPacking cells = normalize(CellPacking{positions});
  OracleResult r = finish(to_sequence_packing(cells), explored);
  r.cells = cells;
  return r;
}

}  // namespace

OracleResult oracle_bcpp1(const Instance& instance) {
  check_limit(instance, kBcpp1OracleLimit, "bcpp1");
  if (instance.size() == 1) return finish(SequencePacking{{0}, {}}, 1);
  const int vertices = instance.size() + instance.size() % 2;
  const std::uint64_t states =
      (std::uint64_t{1} << (vertices - 1)) * static_cast<unsigned>(vertices);
  return finish(algorithm_a1(instance, make_engine("exact")), states);
}

OracleResult oracle_bcpp1_bruteforce(const Instance& instance) {
  check_limit(instance, kBcpp1BruteForceLimit, "bcpp1 brute-force");
  const int n = instance.size();
  std::vector<OrderSearch> parts(n);
#pragma omp parallel for schedule(dynamic)
  for (int f = 0; f < n; ++f) parts[f] = search_orders_from(f, instance);
  return reduce_order_searches(parts, instance);
}

OracleResult oracle_bcpp1_bruteforce_serial(const Instance& instance) {
  check_limit(instance, kBcpp1BruteForceLimit, "bcpp1 brute-force");
  std::vector<OrderSearch> parts;
  for (int f = 0; f < instance.size(); ++f) {
    parts.push_back(search_orders_from(f, instance));
  }
  return reduce_order_searches(parts, instance);
}

OracleResult oracle_sequence(const Instance& instance) {
  check_limit(instance, kSequenceOracleLimit, "sequence");
  SequenceSearch search(instance);
  SequencePacking p = search.solve();
  return finish(std::move(p), search.states());
}

OracleResult oracle_general(const Instance& instance) {
  check_limit(instance, kGeneralOracleLimit, "general");
  const int starts = 2 * instance.size() - 1;
  std::vector<int> lengths(starts);
  std::vector<std::vector<int>> positions(starts);
  std::vector<std::uint64_t> explored(starts);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < starts; ++k) {
    CellSearch search(instance);
    search.run_from(k + 1);
    lengths[k] = search.best_length();
    positions[k] = search.best_positions();
    explored[k] = search.explored();
  }
  // Earlier start cells come first lexicographically.
  const auto best = std::min_element(lengths.begin(), lengths.end()) -
                    lengths.begin();
  return finish_cells(positions[best],
                      std::accumulate(explored.begin(), explored.end(),
                                      std::uint64_t{0}));
}

OracleResult oracle_general_serial(const Instance& instance) {
  check_limit(instance, kGeneralOracleLimit, "general");
  CellSearch search(instance);
  search.run_all();
  return finish_cells(search.best_positions(), search.explored());
}

}  // namespace bcpp
