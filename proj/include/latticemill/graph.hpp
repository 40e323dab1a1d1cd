#pragma once

#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/bits.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace latticemill {

// Loop-free undirected graph with adjacency bitsets. Isolated vertices are
// allowed everywhere (the edge ideal of an edgeless graph is the zero ideal).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int size() const { return n_; }
  Bits neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return test_bit(adj_[static_cast<std::size_t>(u)], v); }
  void add_edge(int u, int v);

  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const; // sorted (u, v), u < v

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<Bits> adj_;
};

// f[j+1] = number of K_{j+1} subgraphs, with f[0] = f_{-1} = 1; trailing
// zeros are never stored, so f.size() - 1 is the clique number.
struct CliqueVector {
  std::vector<BigInt> f;
};

// Vertices 0..p-1 are the x-block, p..2p-1 the y-block. Both blocks are
// cliques; the cross edge {x_i, y_j} is present exactly when not(i <= j) in P
// (in particular x_i y_i is never an edge).
SimpleGraph build_GP(const Poset& P);

// Bipartite comparability companion on the same 2p vertices: {x_i, y_j} is an
// edge exactly when i <= j in P. build_GP(P) is its complement.
SimpleGraph bipartite_G2(const Poset& P);

SimpleGraph complement(const SimpleGraph& G);

// Exact clique counts of every size, by DFS over neighborhood intersections
// with vertices taken in degeneracy order.
CliqueVector clique_vector(const SimpleGraph& G);

// Facets are the inclusion-maximal cliques (Bron-Kerbosch with pivoting).
SimplicialComplex clique_complex(const SimpleGraph& G);

} // namespace latticemill
