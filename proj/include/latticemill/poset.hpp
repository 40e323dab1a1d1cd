#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/bits.hpp"

namespace latticemill {

// Finite poset on elements 0..p-1, stored as the closed relation in both
// directions: up_[a] = {b : a <= b}, down_[b] = {a : a <= b}. Immutable after
// construction; every constructor validates the three order axioms.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of the given cover pairs. Throws IndexError
  // on out-of-range elements and CycleError when the closure is not
  // antisymmetric (i.e. the covers contain a directed cycle).
  static Poset from_cover_relations(int p, const std::vector<std::pair<int, int>>& covers);

  // From a full <= relation given as up-sets; validates all axioms.
  static Poset from_leq(int p, std::vector<Bits> up);

  int size() const { return p_; }
  bool leq(int a, int b) const { return test_bit(up_[a], b); }
  Bits up_set(int a) const { return up_[a]; }       // {b : a <= b}
  Bits down_set(int b) const { return down_[b]; }   // {a : a <= b}
  Bits strict_up(int a) const { return up_[a] & ~bit(a); }
  Bits strict_down(int b) const { return down_[b] & ~bit(b); }

  bool is_order_ideal(Bits s) const;

  // Covering pairs a <. b, sorted lexicographically.
  std::vector<std::pair<int, int>> cover_relations() const;

  bool operator==(const Poset& o) const { return p_ == o.p_ && up_ == o.up_; }

 private:
  int p_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

using OrderIdeal = Bits;

// All order ideals of P, canonically sorted by (cardinality, bitset value).
struct DistributiveLattice {
  int ground = 0;
  std::vector<OrderIdeal> elems;

  bool contains(OrderIdeal x) const;
};

// b[m] = number of intervals of J(P) isomorphic to the rank-m Boolean
// lattice; the vector runs m = 0..k where k is the Sperner number of P.
struct BooleanCensus {
  std::vector<BigInt> b;
};

DistributiveLattice order_ideals(const Poset& P);

// Maximum antichain size, via minimum chain cover (bipartite matching on the
// strict comparabilities).
int sperner_number(const Poset& P);

// Fast census: an interval [I, K] of J(P) is Boolean of rank m exactly when
// K \ I is an m-antichain, i.e. K = I + any m-subset of the minimal elements
// of P \ I. Requires L = order_ideals(P).
BooleanCensus boolean_interval_counts(const DistributiveLattice& L, const Poset& P);

// Structural oracle: rank r if [lo, hi] is order-isomorphic to the lattice of
// subsets of an r-set (element count 2^r, graded levels C(r,l), complemented),
// std::nullopt otherwise. lo and hi must be ideals in L with lo subset of hi.
std::optional<int> interval_is_boolean(const DistributiveLattice& L, OrderIdeal lo,
                                       OrderIdeal hi);

// All labeled posets on p elements in a fixed deterministic order.
// Throws SizeError for p > 5.
std::vector<Poset> enumerate_posets(int p);

// Transitive closure of a random strict upper-triangular relation (each pair
// kept with probability 1/2) pushed through a random relabeling. Deterministic
// per (p, seed).
Poset random_poset(int p, std::uint64_t seed);

Poset chain_poset(int p);
Poset antichain_poset(int p);

} // namespace latticemill
