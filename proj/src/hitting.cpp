#include "latticemill/hitting.hpp"

#include <algorithm>

#include "latticemill/errors.hpp"

namespace latticemill {

namespace {

bool canonical_less(Bits a, Bits b) {
  int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

// Drop edges that are supersets of other edges; hitting the minimal ones
// hits everything.
std::vector<Bits> reduce_edges(const std::vector<Bits>& edges) {
  std::vector<Bits> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Bits> out;
  for (Bits e : sorted) {
    bool dominated = false;
    for (Bits kept : out)
      if (subset_of(kept, e)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(e);
  }
  return out;
}

struct TransversalSearch {
  const std::vector<Bits>& edges;
  std::vector<Bits> results;

  Bits first_unhit(Bits chosen) const {
    for (Bits e : edges)
      if ((e & chosen) == 0) return e;
    return 0;
  }

  // Every vertex of the partial set must keep a private edge, otherwise no
  // extension is minimal.
  bool irredundant(Bits chosen) const {
    bool ok = true;
    for_each_bit(chosen, [&](int v) {
      if (!ok) return;
      bool priv = false;
      for (Bits e : edges)
        if ((e & chosen) == bit(v)) {
          priv = true;
          break;
        }
      ok = priv;
    });
    return ok;
  }

  void run(Bits chosen, Bits excluded) {
    Bits e = first_unhit(chosen);
    if (e == 0) {
      results.push_back(chosen);
      return;
    }
    Bits candidates = e & ~excluded;
    for_each_bit(candidates, [&](int v) {
      Bits next = chosen | bit(v);
      if (irredundant(next)) run(next, excluded);
      excluded |= bit(v);
    });
  }
};

} // namespace

std::vector<Bits> minimal_transversals(const std::vector<Bits>& edges, int n) {
  (void)n;
  std::vector<Bits> reduced = reduce_edges(edges);
  if (reduced.empty()) return {0};
  if (reduced.front() == 0) return {}; // empty edge: nothing can hit it

  TransversalSearch search{reduced, {}};
  search.run(0, 0);
  std::sort(search.results.begin(), search.results.end(), canonical_less);
  return search.results;
}

namespace {

bool covers_within(const std::vector<Bits>& edges, Bits chosen, int budget) {
  Bits e = 0;
  for (Bits cand : edges)
    if ((cand & chosen) == 0) {
      e = cand;
      break;
    }
  if (e == 0) return true;
  if (budget == 0) return false;
  bool found = false;
  for_each_bit(e, [&](int v) {
    if (!found) found = covers_within(edges, chosen | bit(v), budget - 1);
  });
  return found;
}

} // namespace

int min_transversal_size(const std::vector<Bits>& edges, int n) {
  std::vector<Bits> reduced = reduce_edges(edges);
  if (reduced.empty() || reduced.front() == 0)
    throw Error("min_transversal_size needs nonempty edges");

  // Greedy upper bound: repeatedly take a vertex hitting the most unhit edges.
  Bits greedy = 0;
  for (;;) {
    std::vector<Bits> unhit;
    for (Bits e : reduced)
      if ((e & greedy) == 0) unhit.push_back(e);
    if (unhit.empty()) break;
    int best_v = -1;
    std::size_t best_score = 0;
    for (int v = 0; v < n; ++v) {
      std::size_t score = 0;
      for (Bits e : unhit)
        if (test_bit(e, v)) ++score;
      if (score > best_score) {
        best_score = score;
        best_v = v;
      }
    }
    greedy |= bit(best_v);
  }

  int ub = popcount(greedy);
  for (int s = 1; s < ub; ++s)
    if (covers_within(reduced, 0, s)) return s;
  return ub;
}

} // namespace latticemill
