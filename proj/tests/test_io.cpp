#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "latticemill/errors.hpp"
#include "latticemill/identities.hpp"
#include "latticemill/io.hpp"

using namespace latticemill;

TEST_CASE("poset text round trip") {
  std::istringstream in("# a chain\np 3\n1 < 2\n2 < 3\n");
  Poset P = parse_poset(in);
  CHECK(P == chain_poset(3));

  std::ostringstream out;
  write_poset(out, P);
  CHECK(out.str() == "p 3\n1 < 2\n2 < 3\n");

  std::istringstream back(out.str());
  CHECK(parse_poset(back) == P);
}

TEST_CASE("poset parse errors") {
  std::istringstream missing("1 < 2\n");
  CHECK_THROWS_AS(parse_poset(missing), ParseError);

  std::istringstream bad_arrow("p 2\n1 -> 2\n");
  CHECK_THROWS_AS(parse_poset(bad_arrow), ParseError);

  std::istringstream out_of_range("p 2\n1 < 3\n");
  CHECK_THROWS_AS(parse_poset(out_of_range), IndexError);

  std::istringstream cyclic("p 2\n1 < 2\n2 < 1\n");
  CHECK_THROWS_AS(parse_poset(cyclic), CycleError);

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_poset(empty), ParseError);
}

TEST_CASE("complex text round trip") {
  std::istringstream in("n 4\n1 2\n3 4  # a diagonal pair\n");
  SimplicialComplex c = parse_complex(in);
  CHECK(c.facets() == std::vector<Bits>{0b0011, 0b1100});

  std::ostringstream out;
  write_complex(out, c);
  CHECK(out.str() == "n 4\n1 2\n3 4\n");

  // The complex {∅} writes no facet lines and parses back identically.
  std::ostringstream empty_out;
  write_complex(empty_out, SimplicialComplex(3, {}));
  CHECK(empty_out.str() == "n 3\n");
  std::istringstream empty_in(empty_out.str());
  CHECK(parse_complex(empty_in) == SimplicialComplex(3, {}));
}

TEST_CASE("complex parse errors") {
  std::istringstream bad_vertex("n 3\n1 4\n");
  CHECK_THROWS_AS(parse_complex(bad_vertex), IndexError);
  std::istringstream junk("n 3\n1 x\n");
  CHECK_THROWS_AS(parse_complex(junk), ParseError);
}

TEST_CASE("graph text round trip") {
  std::istringstream in("n 3\n1 2\n2 3\n");
  SimpleGraph g = parse_graph(in);
  CHECK(g.edge_count() == 2);
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "n 3\n1 2\n2 3\n");
}

TEST_CASE("report JSON has the pinned schema and key order") {
  VerificationReport rep = verify_theorem1(chain_poset(1), "1-chain");
  Json j = report_to_json(rep);
  CHECK(j.dump() ==
        R"({"identity":"theorem1","instance":"1-chain",)"
        R"("rows":[{"index":1,"lhs":"2","rhs":"2"},{"index":2,"lhs":"1","rhs":"1"}],)"
        R"("pass":true})");
}

TEST_CASE("report text states each row and the verdict") {
  VerificationReport rep = verify_theorem1(chain_poset(1), "1-chain");
  std::string text = report_to_text(rep);
  CHECK(text.find("theorem1 @ 1-chain") != std::string::npos);
  CHECK(text.find("=> PASS") != std::string::npos);
}
