#include "latticemill/monomial.hpp"

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

} // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Bits> gens) : n_(n) {
  if (n < 0) throw IndexError("variable count must be nonnegative");
  if (n > kMaxGround)
    throw SizeError("ideals are limited to " + std::to_string(kMaxGround) + " variables");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Bits g : gens) {
    if (g & ~full_mask(n)) throw IndexError("generator support leaves the variable set");
    bool redundant = false;
    for (Bits kept : gens_)
      if (subset_of(kept, g) && kept != g) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::divides_some_generator(Bits support) const {
  for (Bits g : gens_)
    if (subset_of(g, support)) return true;
  return false;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  return MonomialIdeal(c.ground_size(), minimal_nonfaces(c));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
  if (I.contains_unit()) throw UnitIdealError("the unit ideal has no attached complex");
  std::vector<Bits> facets;
  for (Bits tr : minimal_transversals(I.generators(), I.variables()))
    facets.push_back(full_mask(I.variables()) & ~tr);
  return SimplicialComplex(I.variables(), std::move(facets));
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  std::vector<Bits> gens;
  for (auto [u, v] : G.edges()) gens.push_back(bit(u) | bit(v));
  return MonomialIdeal(G.size(), std::move(gens));
}

MonomialIdeal hibi_ideal(const Poset& P) {
  const int p = P.size();
  if (2 * p > kMaxGround) throw SizeError("Hibi ideals need 2|P| <= 64");
  std::vector<Bits> gens;
  for (OrderIdeal K : order_ideals(P).elems)
    gens.push_back(K | ((full_mask(p) & ~K) << p));
  return MonomialIdeal(2 * p, std::move(gens));
}

BigInt standard_monomial_count(const MonomialIdeal& I, long long t) {
  if (t < 0) throw Error("degree bound must be nonnegative");
  FVector fv = f_vector(complex_of_ideal(I));
  BigInt total = 0;
  for (std::size_t s = 0; s < fv.f.size(); ++s)
    total += fv.f[s] * binom(t, static_cast<long long>(s));
  return total;
}

namespace {

BigInt count_exponent_vectors(const MonomialIdeal& I, int var, long long budget, Bits support) {
  if (I.divides_some_generator(support)) return 0;
  if (var == I.variables()) return 1;
  BigInt total = count_exponent_vectors(I, var + 1, budget, support); // exponent 0
  if (budget > 0)
    // any positive exponent: budget-e for e = 1..budget, support gains var
    for (long long e = 1; e <= budget; ++e)
      total += count_exponent_vectors(I, var + 1, budget - e, support | bit(var));
  return total;
}

} // namespace

BigInt standard_monomial_count_naive(const MonomialIdeal& I, long long t) {
  if (t < 0) throw Error("degree bound must be nonnegative");
  return count_exponent_vectors(I, 0, t, 0);
}

BigInt graded_standard_count(const MonomialIdeal& I, long long t) {
  if (t < 0) throw Error("degree must be nonnegative");
  FVector fv = f_vector(complex_of_ideal(I));
  BigInt total = t == 0 ? 1 : 0;
  for (std::size_t s = 1; s < fv.f.size(); ++s)
    total += fv.f[s] * binom(t - 1, static_cast<long long>(s) - 1);
  return total;
}

int height(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("the zero ideal has no height");
  if (I.contains_unit()) throw UnitIdealError("the unit ideal has no minimal primes");
  return min_transversal_size(I.generators(), I.variables());
}

} // namespace latticemill
