#pragma once

#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/bits.hpp"

namespace latticemill {

// Simplicial complex as an explicit ground-set size plus inclusion-maximal
// faces. Vertex completeness is NOT required: Alexander duals routinely omit
// vertices, and duality depends on the ambient n rather than on f_0. The
// complex whose only face is the empty set is stored as the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() : n_(0), facets_{0} {}

  // Keeps the inclusion-maximal faces, canonically sorted; an empty list
  // collapses to the single facet {}.
  SimplicialComplex(int n, std::vector<Bits> faces);

  static SimplicialComplex full_simplex(int n);

  int ground_size() const { return n_; }
  const std::vector<Bits>& facets() const { return facets_; }
  int dim() const; // -1 for the complex {∅}
  bool is_face(Bits s) const;
  bool is_full_simplex() const;

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Bits> facets_;
};

// f[s] = f_{s-1} = number of faces of cardinality s; f[0] = 1 and the last
// entry is positive, so f.size() is the face-ring Krull dimension d.
struct FVector {
  std::vector<BigInt> f;

  int dimension_plus_one() const { return static_cast<int>(f.size()) - 1; }
  bool operator==(const FVector& o) const { return f == o.f; }
};

// h[k] for k = 0..d; entries may be negative for non-polytopal input.
struct HVector {
  std::vector<BigInt> h;

  bool operator==(const HVector& o) const { return h == o.h; }
};

// Exact face counts, enumerating each face once via the first facet that
// contains it.
FVector f_vector(const SimplicialComplex& c);

// Alternating sum over nonempty facet subsets; exponential in the facet
// count, so it refuses more than 25 facets (SizeError). Cross-check route.
FVector f_vector_inclusion_exclusion(const SimplicialComplex& c);

// Inclusion-minimal non-faces, as the minimal transversals of the facet
// complements. Canonically sorted.
std::vector<Bits> minimal_nonfaces(const SimplicialComplex& c);

// True when every minimal nonface has exactly two elements.
bool is_flag(const SimplicialComplex& c);

// Faces of the dual are the complements of the nonfaces; facets are the
// complements of the minimal nonfaces. Throws FullSimplexError when c is the
// full simplex (the dual would have no faces at all).
SimplicialComplex alexander_dual(const SimplicialComplex& c);

// Dual f-vector straight from the f-vector of a (d-1)-complex on n ambient
// vertices: f*_{i-1} = C(n,i) for 0 <= i <= n-d-1 and
// f*_{n-j-1} = C(n,j) - f_{j-1} for 0 <= j <= d (the j in {0,1} terms vanish
// when every vertex is present). Trailing zeros are trimmed.
FVector dual_f_vector_formula(const FVector& fv, int n);

// h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, d-k) f_{i-1}.
HVector h_vector(const FVector& fv);

// Boundary of the d-simplex: d+1 vertices, all d-subsets as facets. d >= 1.
SimplicialComplex boundary_simplex(int d);

// Boundary of the d-cross-polytope: 2d vertices in antipodal pairs
// (v, v+d), facets are the 2^d transversals of the pairs. d >= 1.
SimplicialComplex boundary_cross_polytope(int d);

// Boundary of the cyclic polytope C(n, d) via Gale's evenness condition.
// Throws DimensionError unless n >= d+1 >= 2.
SimplicialComplex boundary_cyclic_polytope(int n, int d);

} // namespace latticemill
