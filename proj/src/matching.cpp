#include "bcpp/matching.hpp"

#include <algorithm>
#include <queue>

#include "bcpp/errors.hpp"

namespace bcpp {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const UnionGraph& g)
      : g_(g),
        n_(g.size()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        on_path_(n_) {}

  std::vector<int> run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (;;) {
      a = base_[a];
      on_path_[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS over alternating paths from `root`; returns the free endpoint of an
  // augmenting path or -1.
  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          const int b = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const UnionGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<char> on_path_;
};

}  // namespace

Matching max_cardinality_matching(const UnionGraph& g) {
  const std::vector<int> mate = BlossomMatcher(g).run();
  Matching m;
  for (int v = 0; v < g.size(); ++v) {
    if (mate[v] > v) m.pairs.emplace_back(v, mate[v]);
  }
  return m;
}

SequencePacking packing_of_matching(const Matching& m,
                                    const Instance& instance) {
  const int n = instance.size();
  const int cap = instance.denominator();
  std::vector<int> partner(n, -1);
  for (auto [u, v] : m.pairs) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v || partner[u] != -1 || partner[v] != -1) {
      throw InvalidInput("matching pairs must be disjoint charts");
    }
    if (union_level(instance[u], instance[v], cap) != 2) {
      throw InvalidInput("matched charts " + std::to_string(u) + " and " +
                         std::to_string(v) + " do not fit in a 2-union");
    }
    partner[u] = v;
    partner[v] = u;
  }

  SequencePacking p;
  for (int i = 0; i < n; ++i) {
    if (partner[i] != -1 && partner[i] < i) continue;
    if (!p.order.empty()) p.overlaps.push_back(0);
    p.order.push_back(i);
    if (partner[i] != -1) {
      p.order.push_back(partner[i]);
      p.overlaps.push_back(2);
    }
  }
  return p;
}

}  // namespace bcpp
