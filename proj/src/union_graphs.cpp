#include "bcpp/union_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "bcpp/errors.hpp"

namespace bcpp {

UnionDigraph::UnionDigraph(int n, std::vector<std::uint8_t> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ < 0 || static_cast<int>(weights_.size()) != n_ * n_) {
    throw InvalidInput("weight table does not match vertex count");
  }
  for (int i = 0; i < n_; ++i) {
    weights_[i * n_ + i] = 0;
    for (int j = 0; j < n_; ++j) {
      if (weights_[i * n_ + j] > 1) {
        throw InvalidInput("arc weights must be 0 or 1");
      }
    }
  }
}

UnionGraph::UnionGraph(int n)
    : n_(n), dense_(static_cast<std::size_t>(n) * n, 0), adjacency_(n) {}

void UnionGraph::add_edge(int u, int v) {
  if (u == v || has_edge(u, v)) return;
  dense_[u * n_ + v] = dense_[v * n_ + u] = 1;
  adjacency_[u].insert(
      std::lower_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(
      std::lower_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
}

int UnionGraph::edge_count() const {
  int twice = 0;
  for (const auto& adj : adjacency_) twice += static_cast<int>(adj.size());
  return twice / 2;
}

bool is_hamiltonian(const HamCycle& h, int n) {
  if (static_cast<int>(h.tour.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (const int v : h.tour) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int cycle_weight(const HamCycle& h, const UnionDigraph& g) {
  const int n = static_cast<int>(h.tour.size());
  int w = 0;
  for (int k = 0; k < n; ++k) w += g.weight(h.tour[k], h.tour[(k + 1) % n]);
  return w;
}

UnionDigraph build_g1(const Instance& instance) {
  const int n = instance.size();
  if (n < 2) throw InvalidInput("the union digraph needs at least two charts");
  const int cap = instance.denominator();
  std::vector<std::uint8_t> w(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && instance[i].b.units + instance[j].a.units <= cap) {
        w[i * n + j] = 1;
      }
    }
  }
  return UnionDigraph(n, std::move(w));
}

UnionGraph build_g2(const Instance& instance) {
  const int n = instance.size();
  if (n < 2) throw InvalidInput("the union graph needs at least two charts");
  const int cap = instance.denominator();
  UnionGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (instance[i].a.units + instance[j].a.units <= cap &&
          instance[i].b.units + instance[j].b.units <= cap) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

HamCycle cycle_of_packing(const SequencePacking& p, const UnionDigraph& g) {
  if (static_cast<int>(p.order.size()) != g.size()) {
    throw InvalidInput("packing and digraph sizes differ");
  }
  if (std::find(p.overlaps.begin(), p.overlaps.end(), 2) != p.overlaps.end()) {
    throw InvalidInput("packing contains a 2-union");
  }
  return HamCycle{p.order};
}

SequencePacking packing_of_cycle(const HamCycle& h, const UnionDigraph& g,
                                 const Instance& instance) {
  const int n = g.size();
  if (instance.size() != n || !is_hamiltonian(h, n)) {
    throw InvalidInput("not a Hamiltonian cycle of this instance");
  }
  int start = -1;
  if (cycle_weight(h, g) < n) {
    for (int k = 0; k < n; ++k) {
      const int prev = h.tour[(k + n - 1) % n];
      if (g.weight(prev, h.tour[k]) == 0 &&
          (start < 0 || h.tour[k] < h.tour[start])) {
        start = k;
      }
    }
  } else {
    start = static_cast<int>(std::min_element(h.tour.begin(), h.tour.end()) -
                             h.tour.begin());
  }

  SequencePacking p;
  p.order.reserve(n);
  for (int k = 0; k < n; ++k) p.order.push_back(h.tour[(start + k) % n]);
  const int cap = instance.denominator();
  for (int k = 0; k + 1 < n; ++k) {
    const Chart& left = instance[p.order[k]];
    const Chart& right = instance[p.order[k + 1]];
    p.overlaps.push_back(left.b.units + right.a.units <= cap ? 1 : 0);
  }
  return p;
}

}  // namespace bcpp
