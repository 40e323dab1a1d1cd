#pragma once

#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/bits.hpp"
#include "latticemill/graph.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace latticemill {

// Squarefree monomial ideal: the minimal generators as an antichain of
// support sets over n variables. The zero ideal has no generators; the unit
// ideal is the single empty support.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int n, std::vector<Bits> gens); // minimalizes and sorts

  int variables() const { return n_; }
  const std::vector<Bits>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains_unit() const { return !gens_.empty() && gens_.front() == 0; }
  bool divides_some_generator(Bits support) const; // support contains a generator

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

 private:
  int n_ = 0;
  std::vector<Bits> gens_;
};

// Generators are the minimal nonfaces of the complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

// Faces are the supports containing no generator; facets come out as
// complements of the minimal transversals of the generator supports.
// Throws UnitIdealError when the ideal contains 1.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);

// One quadratic generator per edge; the edgeless graph gives the zero ideal.
MonomialIdeal edge_ideal(const SimpleGraph& G);

// In 2p variables (x-block 0..p-1 then y-block p..2p-1), one generator per
// order ideal K: the x-variables of K together with the y-variables of its
// complement. Every generator has degree exactly p.
MonomialIdeal hibi_ideal(const Poset& P);

// Number of monomials of total degree <= t outside I, via the face
// decomposition: sum over faces F of C(t, |F|).
BigInt standard_monomial_count(const MonomialIdeal& I, long long t);

// Same count by direct enumeration of exponent vectors; independent of the
// face route, intended as its integrity check. Cost grows like C(t+n, n).
BigInt standard_monomial_count_naive(const MonomialIdeal& I, long long t);

// Monomials of degree exactly t outside I: sum over nonempty faces F of
// C(t-1, |F|-1), plus 1 when t = 0.
BigInt graded_standard_count(const MonomialIdeal& I, long long t);

// Minimum cardinality of a hitting set of the generator supports (the height
// of a squarefree ideal). Throws ZeroIdealError on the zero ideal and
// UnitIdealError when 1 is a generator.
int height(const MonomialIdeal& I);

} // namespace latticemill
