#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latticemill/binomial.hpp"
#include "latticemill/errors.hpp"
#include "latticemill/graph.hpp"
#include "latticemill/monomial.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/rng.hpp"
#include "latticemill/simplicial.hpp"
#include "oracles.hpp"

using namespace latticemill;

namespace {

// Small corpus of complexes exercised by the property tests.
std::vector<SimplicialComplex> corpus() {
  std::vector<SimplicialComplex> out;
  for (int d = 1; d <= 5; ++d) out.push_back(boundary_simplex(d));
  for (int d = 1; d <= 4; ++d) out.push_back(boundary_cross_polytope(d));
  for (int d = 2; d <= 4; ++d)
    for (int n = d + 1; n <= 8; ++n) out.push_back(boundary_cyclic_polytope(n, d));
  for (int p = 1; p <= 3; ++p)
    for (const Poset& P : enumerate_posets(p)) {
      out.push_back(clique_complex(build_GP(P)));
      out.push_back(complex_of_ideal(hibi_ideal(P)));
    }
  out.push_back(SimplicialComplex(3, {})); // the complex {∅}
  out.push_back(SimplicialComplex(4, {0b0011, 0b1100, 0b0101}));
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng(900 + seed);
    int n = 4 + static_cast<int>(seed % 6);
    std::vector<Bits> faces;
    for (int i = 0; i < 6; ++i) faces.push_back(rng.next_u64() & full_mask(n));
    out.push_back(SimplicialComplex(n, std::move(faces)));
  }
  return out;
}

} // namespace

TEST_CASE("facet canonicalization") {
  SimplicialComplex c(3, {0b011, 0b001, 0b110, 0b110});
  CHECK(c.facets() == std::vector<Bits>{0b011, 0b110}); // dominated + duplicate dropped
  CHECK(c.dim() == 1);
  CHECK(c.is_face(0));
  CHECK(c.is_face(0b010));
  CHECK_FALSE(c.is_face(0b101));

  CHECK(SimplicialComplex(2, {}).facets() == std::vector<Bits>{0});
  CHECK(SimplicialComplex(2, {}).dim() == -1);
  CHECK(SimplicialComplex::full_simplex(3).is_full_simplex());
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(boundary_cross_polytope(3)).f == std::vector<BigInt>{1, 6, 12, 8});
  CHECK(f_vector(SimplicialComplex(3, {})).f == std::vector<BigInt>{1});

  for (int d = 1; d <= 6; ++d) {
    FVector fv = f_vector(boundary_simplex(d));
    REQUIRE(fv.dimension_plus_one() == d);
    for (int i = 0; i <= d - 1; ++i)
      CHECK(fv.f[static_cast<std::size_t>(i + 1)] == binom(d + 1, i + 1));
  }
}

TEST_CASE("both f-vector routes agree with each other and the subset scan") {
  for (const SimplicialComplex& c : corpus()) {
    FVector fast = f_vector(c);
    if (c.facets().size() <= 20) CHECK(fast == f_vector_inclusion_exclusion(c));
    if (c.ground_size() <= 12) CHECK(fast.f == oracles::face_counts_by_scan(c));
  }
}

TEST_CASE("minimal nonfaces") {
  CHECK(minimal_nonfaces(boundary_simplex(2)) == std::vector<Bits>{0b111});
  CHECK(minimal_nonfaces(boundary_cross_polytope(3)) ==
        std::vector<Bits>{0b001001, 0b010010, 0b100100}); // the three diagonals
  CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(4)).empty());

  for (const SimplicialComplex& c : corpus())
    if (c.ground_size() <= 12) CHECK(minimal_nonfaces(c) == oracles::minimal_nonfaces_by_scan(c));
}

TEST_CASE("flag detection") {
  CHECK(is_flag(boundary_cross_polytope(3)));
  CHECK_FALSE(is_flag(boundary_simplex(2)));
  for (int p = 1; p <= 3; ++p)
    for (const Poset& P : enumerate_posets(p)) CHECK(is_flag(clique_complex(build_GP(P))));
}

TEST_CASE("alexander duality") {
  // Boundary of the 2-simplex dualizes to {∅}.
  CHECK(alexander_dual(boundary_simplex(2)) == SimplicialComplex(3, {}));
  CHECK_THROWS_AS(alexander_dual(SimplicialComplex::full_simplex(3)), FullSimplexError);

  for (const SimplicialComplex& c : corpus()) {
    if (c.is_full_simplex()) continue;
    CHECK(alexander_dual(alexander_dual(c)) == c);
  }
}

TEST_CASE("dual f-vector formula") {
  FVector oct = f_vector(boundary_cross_polytope(3));
  FVector dual = dual_f_vector_formula(oct, 6);
  CHECK(dual.f == std::vector<BigInt>{1, 6, 15, 12, 3});
  CHECK(dual.f.back() == binom(6, 2) - oct.f[2]); // top term C(6,2) - f_1

  // The formula must equal direct dualization wherever the dual exists.
  for (const SimplicialComplex& c : corpus()) {
    if (c.is_full_simplex()) continue;
    CHECK(dual_f_vector_formula(f_vector(c), c.ground_size()) == f_vector(alexander_dual(c)));
  }

  // Leading entries read straight off the binomials.
  FVector gamma = f_vector(complex_of_ideal(hibi_ideal(antichain_poset(2))));
  CHECK(dual_f_vector_formula(gamma, 4) ==
        f_vector(clique_complex(build_GP(antichain_poset(2)))));
}

TEST_CASE("h-vectors") {
  FVector oct = f_vector(boundary_cross_polytope(3));
  CHECK(h_vector(oct).h == std::vector<BigInt>{1, 3, 3, 1});

  for (int d = 2; d <= 6; ++d) {
    FVector fv = f_vector(boundary_simplex(d));
    HVector hv = h_vector(fv);
    CHECK(hv.h == std::vector<BigInt>(static_cast<std::size_t>(d) + 1, 1));
    BigInt sum = 0;
    for (const BigInt& h : hv.h) sum += h;
    CHECK(sum == fv.f.back());
  }

  for (const SimplicialComplex& c : corpus()) {
    FVector fv = f_vector(c);
    HVector hv = h_vector(fv);
    CHECK(hv.h[0] == 1);
    if (fv.dimension_plus_one() >= 1)
      CHECK(hv.h[1] == fv.f[1] - fv.dimension_plus_one());
  }
}

TEST_CASE("cross-polytope boundaries") {
  CHECK(boundary_cross_polytope(1).facets() == std::vector<Bits>{0b01, 0b10});
  CHECK(f_vector(boundary_cross_polytope(2)).f == std::vector<BigInt>{1, 4, 4});
  CHECK(f_vector(boundary_cross_polytope(3)).f == std::vector<BigInt>{1, 6, 12, 8});
  for (int d = 1; d <= 6; ++d) {
    FVector fv = f_vector(boundary_cross_polytope(d));
    CHECK(is_flag(boundary_cross_polytope(d)));
    for (int i = 0; i < d; ++i)
      CHECK(fv.f[static_cast<std::size_t>(i + 1)] == binom(d, i + 1) * pow2(i + 1));
  }
}

TEST_CASE("cyclic polytope boundaries via Gale evenness") {
  CHECK(boundary_cyclic_polytope(4, 3) == boundary_simplex(3));
  CHECK(f_vector(boundary_cyclic_polytope(6, 3)).f == std::vector<BigInt>{1, 6, 12, 8});
  CHECK(f_vector(boundary_cyclic_polytope(7, 4)).f.back() == 14);
  CHECK_THROWS_AS(boundary_cyclic_polytope(3, 3), DimensionError);
  CHECK_THROWS_AS(boundary_cyclic_polytope(2, 3), DimensionError);

  for (int d = 2; d <= 5; ++d)
    for (int n = d + 1; n <= 9; ++n) {
      SimplicialComplex c = boundary_cyclic_polytope(n, d);
      CHECK(c.dim() == d - 1);
      for (Bits f : c.facets()) CHECK(popcount(f) == d);
    }
}
