#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latticemill/errors.hpp"
#include "latticemill/graph.hpp"
#include "latticemill/identities.hpp"
#include "latticemill/io.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

using namespace latticemill;

namespace {

std::vector<VerificationReport::Row> rows_of(const VerificationReport& r) { return r.rows; }

} // namespace

TEST_CASE("theorem1 on hand-checked posets") {
  VerificationReport one = verify_theorem1(chain_poset(1), "1-chain");
  CHECK(one.pass);
  REQUIRE(one.rows.size() == 2);
  CHECK(one.rows[0].index == 1);
  CHECK(one.rows[0].lhs == 2);
  CHECK(one.rows[0].rhs == 2);
  CHECK(one.rows[1].lhs == 1);

  VerificationReport two = verify_theorem1(chain_poset(2), "2-chain");
  CHECK(two.pass);
  REQUIRE(two.rows.size() == 3);
  CHECK(two.rows[0].lhs == 3);
  CHECK(two.rows[1].lhs == 4);
  CHECK(two.rows[2].lhs == 1);

  VerificationReport anti = verify_theorem1(antichain_poset(2), "2-antichain");
  CHECK(anti.pass);
  CHECK(anti.rows[0].lhs == 4);
  CHECK(anti.rows[1].lhs == 4);
  CHECK(anti.rows[2].lhs == 1);

  // Degenerate but well-defined: the empty poset.
  CHECK(verify_theorem1(Poset::from_cover_relations(0, {}), "empty").pass);
}

TEST_CASE("theorem1 across every labeled poset up to p = 4") {
  for (int p = 1; p <= 4; ++p)
    for (const Poset& P : enumerate_posets(p)) CHECK(verify_theorem1(P, "poset").pass);
}

TEST_CASE("the worked antichain example") {
  for (int p = 1; p <= 6; ++p) {
    VerificationReport rep = verify_antichain_example(p);
    CHECK(rep.pass);
  }
  VerificationReport three = verify_antichain_example(3);
  // b-rows first: b = (8, 12, 6, 1).
  CHECK(three.rows[0].lhs == 8);
  CHECK(three.rows[1].lhs == 12);
  CHECK(three.rows[2].lhs == 6);
  CHECK(three.rows[3].lhs == 1);
  // then f-rows: f = (1, 6, 12, 8).
  CHECK(three.rows[4].lhs == 1);
  CHECK(three.rows[5].lhs == 6);
  CHECK(three.rows[6].lhs == 12);
  CHECK(three.rows[7].lhs == 8);
}

TEST_CASE("gamma dual equals clique complex") {
  VerificationReport one = verify_gamma_dual_is_clique_complex(chain_poset(1), "1-chain");
  CHECK(one.pass);

  VerificationReport anti = verify_gamma_dual_is_clique_complex(antichain_poset(2), "2-antichain");
  CHECK(anti.pass);
  CHECK(anti.rows[0].lhs == 4); // four facets on either side

  VerificationReport two = verify_gamma_dual_is_clique_complex(chain_poset(2), "2-chain");
  CHECK(two.pass);
  CHECK(two.rows.back().lhs == 2); // top clique size = p

  for (int p = 1; p <= 3; ++p)
    for (const Poset& P : enumerate_posets(p))
      CHECK(verify_gamma_dual_is_clique_complex(P, "poset").pass);
}

TEST_CASE("Dehn-Sommerville, Euler-Poincare and h-symmetry") {
  VerificationReport oct = verify_dehn_sommerville(boundary_cross_polytope(3), "octahedron");
  CHECK(oct.pass);
  // Euler row: 6 - 12 + 8 = 2.
  bool saw_euler = false;
  for (const auto& r : rows_of(oct))
    if (r.index == 4 && r.lhs == 2 && r.rhs == 2) saw_euler = true;
  CHECK(saw_euler);

  CHECK(verify_dehn_sommerville(boundary_simplex(4), "4-simplex").pass);
  CHECK(verify_dehn_sommerville(boundary_cyclic_polytope(7, 4), "C(7,4)").pass);

  // A non-sphere fails: the full simplex boundary complex is fine, but a
  // cone (full simplex) violates Euler-Poincare.
  CHECK_FALSE(verify_dehn_sommerville(SimplicialComplex::full_simplex(3), "cone").pass);
}

TEST_CASE("flag corollary") {
  VerificationReport square = verify_flag_corollary(boundary_cross_polytope(2), "square");
  CHECK(square.pass);
  CHECK(square.rows[0].lhs == 4); // 2 [C(4,2) - 4]
  CHECK(square.rows[0].rhs == 4); // -16 + 36 - 16
  CHECK(square.rows[1].lhs == 2); // multiplicity
  CHECK(square.rows[2].lhs == 2); // height

  VerificationReport oct = verify_flag_corollary(boundary_cross_polytope(3), "octahedron");
  CHECK(oct.pass);
  CHECK(oct.rows[0].lhs == 6);

  CHECK(verify_flag_corollary(boundary_cross_polytope(4), "4-cross").pass);
  CHECK_THROWS_AS(verify_flag_corollary(boundary_simplex(3), "simplex"), NotFlagError);
}

TEST_CASE("corpus runs are deterministic and sized as configured") {
  CorpusSpec spec;
  spec.exhaustive_p_max = 3;
  spec.random_p = 5;
  spec.random_count = 7;
  spec.seed = 7;
  spec.antichain_p_max = 3;
  spec.simplex_d_max = 3;
  spec.cross_d_max = 3;
  spec.cyclic_n_max = 7;
  spec.cyclic_d_max = 3;

  std::vector<VerificationReport> reports = run_corpus(spec);
  for (const auto& r : reports) CHECK(r.pass);

  // 23 exhaustive posets + 7 random + 3 antichains; simplex d=1..3 gives a
  // flag report only at d=1; cross d=1..3 give both; cyclic pairs (n,d) with
  // d < n <= 7 give DS plus flag whenever flag.
  std::size_t exhaustive = 1 + 3 + 19;
  CHECK(reports.size() > exhaustive + 7 + 3);

  std::vector<VerificationReport> again = run_corpus(spec);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    CHECK(report_to_json(again[i]) == report_to_json(reports[i]));

  // Capping the worker pool must not change anything observable.
  setenv("LATTICEMILL_THREADS", "1", 1);
  std::vector<VerificationReport> serial = run_corpus(spec);
  unsetenv("LATTICEMILL_THREADS");
  REQUIRE(serial.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    CHECK(report_to_json(serial[i]) == report_to_json(reports[i]));
}

TEST_CASE("corpus honors the documented family counts") {
  CorpusSpec spec;
  spec.exhaustive_p_max = 4;
  spec.random_count = 0;
  spec.antichain_p_max = 0;
  spec.simplex_d_max = 0;
  spec.cross_d_max = 0;
  spec.cyclic_n_max = 0;
  spec.cyclic_d_max = 0;
  CHECK(run_corpus(spec).size() == 219 + 19 + 3 + 1);

  CorpusSpec cross;
  cross.exhaustive_p_max = 0;
  cross.random_count = 0;
  cross.antichain_p_max = 0;
  cross.simplex_d_max = 0;
  cross.cross_d_max = 6;
  cross.cyclic_n_max = 0;
  cross.cyclic_d_max = 0;
  CHECK(run_corpus(cross).size() == 12); // 6 Dehn-Sommerville + 6 flag

  CorpusSpec random_only;
  random_only.exhaustive_p_max = 0;
  random_only.random_p = 8;
  random_only.random_count = 100;
  random_only.antichain_p_max = 0;
  random_only.simplex_d_max = 0;
  random_only.cross_d_max = 0;
  random_only.cyclic_n_max = 0;
  random_only.cyclic_d_max = 0;
  std::vector<VerificationReport> reports = run_corpus(random_only);
  CHECK(reports.size() == 100);
  for (const auto& r : reports) CHECK(r.identity == "theorem1");
}
