#include "latticemill/poset.hpp"

#include <algorithm>
#include <string>

#include "latticemill/binomial.hpp"
#include "latticemill/errors.hpp"
#include "latticemill/rng.hpp"

namespace latticemill {

namespace {

void check_ground(int p) {
  if (p < 0) throw IndexError("element count must be nonnegative");
  if (p > kMaxGround)
    throw SizeError("posets are limited to " + std::to_string(kMaxGround) + " elements");
}

bool canonical_less(Bits a, Bits b) {
  int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

} // namespace

Poset Poset::from_leq(int p, std::vector<Bits> up) {
  check_ground(p);
  Poset P;
  P.p_ = p;
  P.up_ = std::move(up);
  P.down_.assign(p, 0);
  for (int a = 0; a < p; ++a) {
    if (!test_bit(P.up_[a], a)) throw Error("relation is not reflexive");
    if (P.up_[a] & ~full_mask(p)) throw IndexError("relation leaves the ground set");
    for_each_bit(P.up_[a], [&](int b) { P.down_[b] |= bit(a); });
  }
  for (int a = 0; a < p; ++a) {
    if (popcount(P.up_[a] & P.down_[a]) != 1)
      throw CycleError("relation is not antisymmetric");
    for_each_bit(P.strict_up(a), [&](int b) {
      if (!subset_of(P.up_[b], P.up_[a])) throw Error("relation is not transitive");
    });
  }
  return P;
}

Poset Poset::from_cover_relations(int p, const std::vector<std::pair<int, int>>& covers) {
  check_ground(p);
  std::vector<Bits> succ(p, 0);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= p || b < 0 || b >= p)
      throw IndexError("cover pair (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") is out of range");
    succ[a] |= bit(b);
  }

  // Reachability closure; a cycle shows up as mutually reachable elements.
  std::vector<Bits> up(p, 0);
  for (int a = 0; a < p; ++a) up[a] = bit(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < p; ++a) {
      Bits before = up[a];
      for_each_bit(up[a], [&](int b) { up[a] |= succ[b]; });
      for_each_bit(up[a], [&](int b) { up[a] |= up[b]; });
      if (up[a] != before) changed = true;
    }
  }
  for (int a = 0; a < p; ++a)
    for_each_bit(up[a] & ~bit(a), [&](int b) {
      if (test_bit(up[b], a)) throw CycleError("cover relation contains a directed cycle");
    });
  return from_leq(p, std::move(up));
}

bool Poset::is_order_ideal(Bits s) const {
  bool ok = true;
  for_each_bit(s, [&](int b) { ok = ok && subset_of(down_[b], s); });
  return ok;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p_; ++a)
    for_each_bit(strict_up(a), [&](int b) {
      if ((strict_up(a) & strict_down(b)) == 0) out.emplace_back(a, b);
    });
  std::sort(out.begin(), out.end());
  return out;
}

bool DistributiveLattice::contains(OrderIdeal x) const {
  return std::binary_search(elems.begin(), elems.end(), x, canonical_less);
}

DistributiveLattice order_ideals(const Poset& P) {
  const int p = P.size();

  // Linear extension: repeatedly take the lowest-index minimal element.
  std::vector<int> topo;
  topo.reserve(p);
  Bits placed = 0;
  while (static_cast<int>(topo.size()) < p) {
    for (int a = 0; a < p; ++a) {
      if (test_bit(placed, a)) continue;
      if (subset_of(P.strict_down(a), placed)) {
        topo.push_back(a);
        placed |= bit(a);
        break;
      }
    }
  }

  // Binary DFS over topo positions. An element may join only when its strict
  // down-set already did, so every leaf is an ideal and each ideal is reached
  // exactly once.
  DistributiveLattice L;
  L.ground = p;
  std::vector<std::pair<int, Bits>> stack;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [pos, cur] = stack.back();
    stack.pop_back();
    if (pos == p) {
      L.elems.push_back(cur);
      continue;
    }
    int e = topo[static_cast<std::size_t>(pos)];
    if (subset_of(P.strict_down(e), cur)) stack.emplace_back(pos + 1, cur | bit(e));
    stack.emplace_back(pos + 1, cur);
  }

  std::sort(L.elems.begin(), L.elems.end(), canonical_less);
  return L;
}

namespace {

// Hopcroft-Karp maximum matching on the bipartite strict-comparability graph;
// by Dilworth, max antichain = p - matching.
class HopcroftKarp {
 public:
  HopcroftKarp(int n_left, int n_right) : adj_(n_left), match_l_(n_left, -1), match_r_(n_right, -1) {}

  void add_edge(int l, int r) { adj_[l].push_back(r); }

  int run() {
    int matching = 0;
    const int n = static_cast<int>(adj_.size());
    for (;;) {
      if (!bfs()) return matching;
      for (int l = 0; l < n; ++l)
        if (match_l_[l] < 0 && dfs(l)) ++matching;
    }
  }

 private:
  static constexpr int kInf = 1 << 30;

  bool bfs() {
    const int n = static_cast<int>(adj_.size());
    dist_.assign(n, kInf);
    std::vector<int> queue;
    for (int l = 0; l < n; ++l)
      if (match_l_[l] < 0) {
        dist_[l] = 0;
        queue.push_back(l);
      }
    bool reachable = false;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int l = queue[q];
      for (int r : adj_[l]) {
        int l2 = match_r_[r];
        if (l2 < 0) {
          reachable = true;
        } else if (dist_[l2] == kInf) {
          dist_[l2] = dist_[l] + 1;
          queue.push_back(l2);
        }
      }
    }
    return reachable;
  }

  bool dfs(int l) {
    for (int r : adj_[l]) {
      int l2 = match_r_[r];
      if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
        match_l_[l] = r;
        match_r_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_, match_r_;
  std::vector<int> dist_;
};

} // namespace

int sperner_number(const Poset& P) {
  const int p = P.size();
  HopcroftKarp hk(p, p);
  for (int a = 0; a < p; ++a)
    for_each_bit(P.strict_up(a), [&](int b) { hk.add_edge(a, b); });
  return p - hk.run();
}

BooleanCensus boolean_interval_counts(const DistributiveLattice& L, const Poset& P) {
  const int p = P.size();
  const Bits full = full_mask(p);
  std::vector<BigInt> acc(static_cast<std::size_t>(p) + 1);
  int k = 0;
  for (OrderIdeal ideal : L.elems) {
    Bits rest = full & ~ideal;
    int free_count = 0;
    for_each_bit(rest, [&](int a) {
      if ((P.strict_down(a) & rest) == 0) ++free_count;
    });
    k = std::max(k, free_count);
    for (int m = 0; m <= free_count; ++m)
      acc[static_cast<std::size_t>(m)] += binom(free_count, m);
  }
  BooleanCensus census;
  census.b.assign(acc.begin(), acc.begin() + k + 1);
  return census;
}

std::optional<int> interval_is_boolean(const DistributiveLattice& L, OrderIdeal lo,
                                       OrderIdeal hi) {
  if (!subset_of(lo, hi) || !L.contains(lo) || !L.contains(hi))
    throw Error("interval endpoints must be ideals with lo subset of hi");

  std::vector<OrderIdeal> members;
  for (OrderIdeal x : L.elems)
    if (subset_of(lo, x) && subset_of(x, hi)) members.push_back(x);

  const int r = popcount(hi & ~lo);
  if (r >= 62 || members.size() != (std::size_t{1} << r)) return std::nullopt;

  // Graded: level l (by added cardinality) must hold C(r, l) members.
  std::vector<std::size_t> level(static_cast<std::size_t>(r) + 1, 0);
  for (OrderIdeal x : members) ++level[static_cast<std::size_t>(popcount(x & ~lo))];
  for (int l = 0; l <= r; ++l)
    if (BigInt(level[static_cast<std::size_t>(l)]) != binom(r, l)) return std::nullopt;

  // Complemented: meet is intersection and join is union in J(P).
  for (OrderIdeal x : members) {
    bool found = false;
    for (OrderIdeal y : members)
      if ((x & y) == lo && (x | y) == hi) {
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return r;
}

std::vector<Poset> enumerate_posets(int p) {
  if (p < 0) throw IndexError("element count must be nonnegative");
  if (p > 5) throw SizeError("exhaustive poset enumeration is limited to p <= 5");

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) pairs.emplace_back(a, b);

  // Each unordered pair is incomparable (0), a<b (1) or b<a (2); walk the
  // mixed-radix counter and keep the transitive assignments.
  std::vector<Poset> out;
  std::vector<int> digits(pairs.size(), 0);
  for (;;) {
    std::vector<Bits> up(static_cast<std::size_t>(p), 0);
    for (int a = 0; a < p; ++a) up[static_cast<std::size_t>(a)] = bit(a);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (digits[i] == 1) up[static_cast<std::size_t>(a)] |= bit(b);
      if (digits[i] == 2) up[static_cast<std::size_t>(b)] |= bit(a);
    }
    bool transitive = true;
    for (int a = 0; a < p && transitive; ++a)
      for_each_bit(up[static_cast<std::size_t>(a)] & ~bit(a), [&](int b) {
        if (!subset_of(up[static_cast<std::size_t>(b)], up[static_cast<std::size_t>(a)]))
          transitive = false;
      });
    if (transitive) out.push_back(Poset::from_leq(p, up));

    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return out;
}

Poset random_poset(int p, std::uint64_t seed) {
  check_ground(p);
  Rng rng(seed);

  std::vector<Bits> strict(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (rng.next_bool()) strict[static_cast<std::size_t>(i)] |= bit(j);
  for (int i = p - 2; i >= 0; --i)
    for_each_bit(strict[static_cast<std::size_t>(i)],
                 [&](int j) { strict[static_cast<std::size_t>(i)] |= strict[static_cast<std::size_t>(j)]; });

  std::vector<int> pos(static_cast<std::size_t>(p));
  for (int a = 0; a < p; ++a) pos[static_cast<std::size_t>(a)] = a;
  rng.shuffle(pos);

  std::vector<Bits> up(static_cast<std::size_t>(p), 0);
  for (int a = 0; a < p; ++a) {
    up[static_cast<std::size_t>(a)] = bit(a);
    for (int b = 0; b < p; ++b)
      if (b != a && test_bit(strict[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])],
                             pos[static_cast<std::size_t>(b)]))
        up[static_cast<std::size_t>(a)] |= bit(b);
  }
  return Poset::from_leq(p, std::move(up));
}

Poset chain_poset(int p) {
  check_ground(p);
  std::vector<Bits> up(static_cast<std::size_t>(p));
  for (int a = 0; a < p; ++a) up[static_cast<std::size_t>(a)] = full_mask(p) & ~full_mask(a);
  return Poset::from_leq(p, std::move(up));
}

Poset antichain_poset(int p) {
  check_ground(p);
  std::vector<Bits> up(static_cast<std::size_t>(p));
  for (int a = 0; a < p; ++a) up[static_cast<std::size_t>(a)] = bit(a);
  return Poset::from_leq(p, std::move(up));
}

} // namespace latticemill
