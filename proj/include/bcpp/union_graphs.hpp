#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bcpp/model.hpp"

namespace bcpp {

// Complete digraph on the charts; arc (i, j) has weight 1 when chart j can
// follow chart i in a 1-union, 0 otherwise. Stored as a dense table.
class UnionDigraph {
 public:
  UnionDigraph() = default;
  // Row-major n*n table; diagonal entries are ignored.
  UnionDigraph(int n, std::vector<std::uint8_t> weights);

  int size() const { return n_; }
  int weight(int from, int to) const { return weights_[from * n_ + to]; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> weights_;
};

// Undirected graph with an edge {i, j} when the two charts fit in a 2-union.
class UnionGraph {
 public:
  explicit UnionGraph(int n);

  void add_edge(int u, int v);
  int size() const { return n_; }
  bool has_edge(int u, int v) const { return dense_[u * n_ + v] != 0; }
  // Ascending.
  std::span<const int> neighbors(int u) const { return adjacency_[u]; }
  int edge_count() const;

 private:
  int n_;
  std::vector<std::uint8_t> dense_;
  std::vector<std::vector<int>> adjacency_;
};

struct HamCycle {
  std::vector<int> tour;  // i_1, ..., i_n; the closing arc is implicit

  friend bool operator==(const HamCycle&, const HamCycle&) = default;
};

bool is_hamiltonian(const HamCycle& h, int n);
int cycle_weight(const HamCycle& h, const UnionDigraph& g);

UnionDigraph build_g1(const Instance& instance);
UnionGraph build_g2(const Instance& instance);

// The cycle visiting the charts in the packing's left-to-right order.
// Rejects packings that use a 2-union.
HamCycle cycle_of_packing(const SequencePacking& p, const UnionDigraph& g);

// Cuts the cycle open right before a chart entered by a zero-weight arc
// (the lowest-indexed such chart; chart 0 side when every arc weighs 1)
// and joins successive charts by a 1-union wherever one fits.
SequencePacking packing_of_cycle(const HamCycle& h, const UnionDigraph& g,
                                 const Instance& instance);

}  // namespace bcpp
