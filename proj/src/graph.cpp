#include "latticemill/graph.hpp"

#include <algorithm>
#include <string>

#include "latticemill/errors.hpp"

namespace latticemill {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw IndexError("vertex count must be nonnegative");
  if (n > kMaxGround)
    throw SizeError("graphs are limited to " + std::to_string(kMaxGround) + " vertices");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw IndexError("edge endpoint out of range");
  if (u == v) throw Error("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

long long SimpleGraph::edge_count() const {
  long long twice = 0;
  for (Bits a : adj_) twice += popcount(a);
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                 [&](int v) { out.emplace_back(u, v); });
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph build_GP(const Poset& P) {
  const int p = P.size();
  if (2 * p > kMaxGround) throw SizeError("G(P) needs 2|P| <= 64");
  SimpleGraph g(2 * p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      g.add_edge(i, j);         // x-block clique
      g.add_edge(p + i, p + j); // y-block clique
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (!P.leq(i, j)) g.add_edge(i, p + j);
  return g;
}

SimpleGraph bipartite_G2(const Poset& P) {
  const int p = P.size();
  if (2 * p > kMaxGround) throw SizeError("G2(P) needs 2|P| <= 64");
  SimpleGraph g(2 * p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (P.leq(i, j)) g.add_edge(i, p + j);
  return g;
}

SimpleGraph complement(const SimpleGraph& G) {
  const int n = G.size();
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!G.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

// Vertex order with small back-degree: repeatedly remove a minimum-degree
// vertex. Keeps the clique-extension candidate sets small.
std::vector<int> degeneracy_order(const SimpleGraph& G) {
  const int n = G.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Bits remaining = full_mask(n);
  while (remaining) {
    int best = -1, best_deg = kMaxGround + 1;
    for_each_bit(remaining, [&](int v) {
      int deg = popcount(G.neighbors(v) & remaining);
      if (deg < best_deg) {
        best_deg = deg;
        best = v;
      }
    });
    order.push_back(best);
    remaining &= ~bit(best);
  }
  return order;
}

void count_cliques(const SimpleGraph& G, const std::vector<Bits>& later_nbrs, Bits candidates,
                   int depth, std::vector<BigInt>& counts) {
  if (static_cast<std::size_t>(depth) >= counts.size()) counts.resize(static_cast<std::size_t>(depth) + 1);
  for_each_bit(candidates, [&](int v) {
    counts[static_cast<std::size_t>(depth)] += 1;
    Bits next = candidates & later_nbrs[static_cast<std::size_t>(v)];
    if (next) count_cliques(G, later_nbrs, next, depth + 1, counts);
  });
}

} // namespace

CliqueVector clique_vector(const SimpleGraph& G) {
  std::vector<int> order = degeneracy_order(G);
  std::vector<int> rank(static_cast<std::size_t>(G.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  std::vector<Bits> later(static_cast<std::size_t>(G.size()), 0);
  for (int v = 0; v < G.size(); ++v)
    for_each_bit(G.neighbors(v), [&](int u) {
      if (rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)])
        later[static_cast<std::size_t>(v)] |= bit(u);
    });

  CliqueVector cv;
  cv.f.push_back(1); // the empty clique
  std::vector<BigInt> counts;
  count_cliques(G, later, full_mask(G.size()), 0, counts);
  for (auto& c : counts) cv.f.push_back(std::move(c));
  while (cv.f.size() > 1 && cv.f.back() == 0) cv.f.pop_back();
  return cv;
}

namespace {

void bron_kerbosch(const SimpleGraph& G, Bits r, Bits p, Bits x, std::vector<Bits>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex covering the most of p.
  int pivot = -1, best = -1;
  for_each_bit(p | x, [&](int u) {
    int cover = popcount(p & G.neighbors(u));
    if (cover > best) {
      best = cover;
      pivot = u;
    }
  });
  Bits candidates = p & ~G.neighbors(pivot);
  for_each_bit(candidates, [&](int v) {
    bron_kerbosch(G, r | bit(v), p & G.neighbors(v), x & G.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

} // namespace

SimplicialComplex clique_complex(const SimpleGraph& G) {
  std::vector<Bits> maximal;
  bron_kerbosch(G, 0, full_mask(G.size()), 0, maximal);
  return SimplicialComplex(G.size(), std::move(maximal));
}

} // namespace latticemill
