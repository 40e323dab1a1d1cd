// End-to-end checks of the command-line binary: exit-code contract
// (0 pass / 1 violation / 2 input error) and byte-determinism of generated
// output. The binary path comes from the LATTICEMILL_CLI environment
// variable, which ctest sets to the built executable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
  const char* p = std::getenv("LATTICEMILL_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LATTICEMILL_CLI must point at the built binary");
  return p;
}

int run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, int expect_rc = 0) {
  std::string out_file = "cli_capture.tmp";
  std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WEXITSTATUS(status) == expect_rc);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  std::remove(out_file.c_str());
  return text.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

} // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify theorem1 --gen chain -p 3") == 0);
  CHECK(run("verify gamma-dual --gen random-poset -p 4 --seed 9") == 0);
  CHECK(run("verify dehn-sommerville --gen cross-polytope -d 4 --json") == 0);
  CHECK(run("verify flag-corollary --gen cross-polytope -d 3") == 0);
  CHECK(run("verify antichain-example -p 3") == 0);

  write_file("cyclic.poset.tmp", "p 2\n1 < 2\n2 < 1\n");
  CHECK(run("verify theorem1 --poset cyclic.poset.tmp") == 2);
  std::remove("cyclic.poset.tmp");

  // Both or neither input source is a usage error.
  CHECK(run("verify theorem1") == 2);
  CHECK(run("verify theorem1 --gen chain -p 2 --poset nosuch.poset") == 2);
  CHECK(run("verify theorem1 --poset nosuch.poset") == 2);
  CHECK(run("verify nonsense --gen chain -p 2") == 2);

  // A complex that is not a sphere violates Dehn-Sommerville: exit 1.
  write_file("cone.complex.tmp", "n 3\n1 2 3\n");
  CHECK(run("verify dehn-sommerville --complex cone.complex.tmp") == 1);
  // ... and it is not flag either (its dual does not even exist): exit 2.
  CHECK(run("verify flag-corollary --complex cone.complex.tmp") == 2);
  std::remove("cone.complex.tmp");
}

TEST_CASE("hilbert exit codes and table shape") {
  std::string table = run_capture("hilbert --gen chain -p 1 --t-max 5 --method all");
  // five 1s plus the t=0 row: every data line ends in agreement.
  int ones = 0;
  std::istringstream lines(table);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line != "t" && line.back() == '1') ++ones;
  CHECK(ones >= 6);
  CHECK(table.find("# methods agree") != std::string::npos);

  CHECK(run("hilbert --gen antichain -p 3 --t-max 8 --method all") == 0);
  CHECK(run("hilbert --gen cross-polytope -d 3 --t-max 6 --method all") == 0);
  CHECK(run("hilbert --gen chain -p 2 --t-max -1") == 2);
  CHECK(run("hilbert --gen chain -p 2 --t-max 4 --method bogus") == 2);
  // closed-form is a poset-side method.
  CHECK(run("hilbert --gen cross-polytope -d 3 --t-max 4 --method closed-form") == 2);
}

TEST_CASE("gen output is byte-identical for identical parameters") {
  std::string anti = run_capture("gen antichain -p 4");
  CHECK(anti == "p 4\n"); // no cover lines
  CHECK(run_capture("gen antichain -p 4") == anti);

  std::string rand1 = run_capture("gen random-poset -p 8 --seed 7");
  std::string rand2 = run_capture("gen random-poset -p 8 --seed 7");
  CHECK(rand1 == rand2);
  CHECK(rand1.find("p 8") == 0);

  std::string cyclic = run_capture("gen cyclic-polytope -n 7 -d 4");
  int facet_lines = -1; // discount the header
  std::istringstream lines(cyclic);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) ++facet_lines;
  CHECK(facet_lines == 14);

  CHECK(run("gen nonsense -p 3") == 2);
  CHECK(run("gen cyclic-polytope -n 3 -d 3") == 2);
}

TEST_CASE("generated files feed back into verify") {
  std::string poset = run_capture("gen random-poset -p 6 --seed 11");
  write_file("roundtrip.poset.tmp", poset);
  CHECK(run("verify all --poset roundtrip.poset.tmp") == 0);
  std::remove("roundtrip.poset.tmp");

  std::string complex = run_capture("gen cross-polytope -d 3");
  write_file("roundtrip.complex.tmp", complex);
  CHECK(run("verify all --complex roundtrip.complex.tmp") == 0);
  CHECK(run("verify dehn-sommerville --complex roundtrip.complex.tmp --json") == 0);
  std::remove("roundtrip.complex.tmp");
}
