#include "latticemill/simplicial.hpp"

#include <algorithm>
#include <string>

#include "latticemill/binomial.hpp"
#include "latticemill/errors.hpp"
#include "latticemill/hitting.hpp"

namespace latticemill {

namespace {

bool canonical_less(Bits a, Bits b) {
  int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

void check_ground(int n) {
  if (n < 0) throw IndexError("ground-set size must be nonnegative");
  if (n > kMaxGround)
    throw SizeError("complexes are limited to " + std::to_string(kMaxGround) + " vertices");
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Bits> faces) : n_(n) {
  check_ground(n);
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Bits f : faces) {
    if (f & ~full_mask(n)) throw IndexError("facet leaves the ground set");
    bool dominated = false;
    for (Bits g : faces)
      if (g != f && subset_of(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) facets_.push_back(f);
  }
  if (facets_.empty()) facets_.push_back(0);
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  return SimplicialComplex(n, {full_mask(n)});
}

int SimplicialComplex::dim() const {
  return popcount(facets_.back()) - 1;
}

bool SimplicialComplex::is_face(Bits s) const {
  for (Bits f : facets_)
    if (subset_of(s, f)) return true;
  return false;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && facets_[0] == full_mask(n_);
}

FVector f_vector(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  std::vector<unsigned long long> counts(static_cast<std::size_t>(c.dim()) + 2, 0);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    // Each face is charged to the first facet containing it.
    Bits f = facets[i];
    Bits s = f;
    for (;;) {
      bool owned = true;
      for (std::size_t j = 0; j < i; ++j)
        if (subset_of(s, facets[j])) {
          owned = false;
          break;
        }
      if (owned) ++counts[static_cast<std::size_t>(popcount(s))];
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  FVector fv;
  fv.f.assign(counts.begin(), counts.end());
  while (fv.f.size() > 1 && fv.f.back() == 0) fv.f.pop_back();
  return fv;
}

FVector f_vector_inclusion_exclusion(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  const std::size_t m = facets.size();
  if (m > 25) throw SizeError("inclusion-exclusion f-vector is limited to 25 facets");

  // cnt[w] = signed number of nonempty facet subsets whose intersection has
  // w vertices; then f_{s-1} = sum_w cnt[w] C(w, s).
  std::vector<long long> cnt(kMaxGround + 1, 0);
  struct Frame {
    std::size_t next;
    Bits inter;
    int sign;
  };
  std::vector<Frame> frames;
  for (std::size_t i = 0; i < m; ++i) frames.push_back({i + 1, facets[i], +1});
  while (!frames.empty()) {
    Frame fr = frames.back();
    frames.pop_back();
    cnt[static_cast<std::size_t>(popcount(fr.inter))] += fr.sign;
    for (std::size_t j = fr.next; j < m; ++j)
      frames.push_back({j + 1, fr.inter & facets[j], -fr.sign});
  }

  int top = c.dim() + 1;
  FVector fv;
  fv.f.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 0; s <= top; ++s)
    for (int w = 0; w <= kMaxGround; ++w)
      if (cnt[static_cast<std::size_t>(w)] != 0)
        fv.f[static_cast<std::size_t>(s)] += BigInt(cnt[static_cast<std::size_t>(w)]) * binom(w, s);
  while (fv.f.size() > 1 && fv.f.back() == 0) fv.f.pop_back();
  return fv;
}

std::vector<Bits> minimal_nonfaces(const SimplicialComplex& c) {
  std::vector<Bits> edges;
  edges.reserve(c.facets().size());
  for (Bits f : c.facets()) edges.push_back(full_mask(c.ground_size()) & ~f);
  return minimal_transversals(edges, c.ground_size());
}

bool is_flag(const SimplicialComplex& c) {
  for (Bits nf : minimal_nonfaces(c))
    if (popcount(nf) != 2) return false;
  return true;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  if (c.is_full_simplex())
    throw FullSimplexError("the full simplex has no nonfaces, so its dual has no faces");
  std::vector<Bits> dual_facets;
  for (Bits nf : minimal_nonfaces(c))
    dual_facets.push_back(full_mask(c.ground_size()) & ~nf);
  return SimplicialComplex(c.ground_size(), std::move(dual_facets));
}

FVector dual_f_vector_formula(const FVector& fv, int n) {
  const int d = fv.dimension_plus_one();
  if (d > n) throw DimensionError("f-vector does not fit on an n-vertex ground set");
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n - d - 1; ++i) out[static_cast<std::size_t>(i)] = binom(n, i);
  for (int j = 0; j <= d; ++j)
    out[static_cast<std::size_t>(n - j)] = binom(n, j) - fv.f[static_cast<std::size_t>(j)];
  FVector dual;
  dual.f = std::move(out);
  while (dual.f.size() > 1 && dual.f.back() == 0) dual.f.pop_back();
  return dual;
}

HVector h_vector(const FVector& fv) {
  const int d = fv.dimension_plus_one();
  HVector hv;
  hv.h.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) {
      BigInt term = binom(d - i, d - k) * fv.f[static_cast<std::size_t>(i)];
      if ((k - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    hv.h[static_cast<std::size_t>(k)] = acc;
  }
  return hv;
}

SimplicialComplex boundary_simplex(int d) {
  if (d < 1) throw DimensionError("simplex boundary needs d >= 1");
  check_ground(d + 1);
  std::vector<Bits> facets;
  Bits full = full_mask(d + 1);
  for (int v = 0; v <= d; ++v) facets.push_back(full & ~bit(v));
  return SimplicialComplex(d + 1, std::move(facets));
}

SimplicialComplex boundary_cross_polytope(int d) {
  if (d < 1) throw DimensionError("cross-polytope boundary needs d >= 1");
  check_ground(2 * d);
  std::vector<Bits> facets;
  for (Bits pick = 0; pick < bit(d); ++pick) {
    Bits f = 0;
    for (int i = 0; i < d; ++i) f |= test_bit(pick, i) ? bit(i + d) : bit(i);
    facets.push_back(f);
  }
  return SimplicialComplex(2 * d, std::move(facets));
}

SimplicialComplex boundary_cyclic_polytope(int n, int d) {
  if (d < 1 || n <= d) throw DimensionError("cyclic polytope needs n >= d+1 >= 2");
  if (n > 20) throw SizeError("cyclic polytope generation is limited to 20 vertices");

  // Gale evenness: every block of consecutive chosen vertices lying strictly
  // between two unchosen ones has even length. Scan each d-subset once.
  std::vector<Bits> facets;
  std::vector<int> comb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Bits s = 0;
    for (int v : comb) s |= bit(v);

    int run = 0;
    bool seen_gap = false;
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if (test_bit(s, v)) {
        ++run;
      } else {
        if (seen_gap && run % 2 != 0) {
          ok = false;
          break;
        }
        seen_gap = true;
        run = 0;
      }
    }
    if (ok) facets.push_back(s);

    int i = d - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return SimplicialComplex(n, std::move(facets));
}

} // namespace latticemill
