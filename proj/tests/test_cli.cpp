#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "multipark/json_io.hpp"
#include "test_util.hpp"

using namespace multipark;
using namespace multipark::testutil;

namespace {

const std::string kK3 = R"({"n":3,"edges":[[1,2],[1,3],[2,3]]})";

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + MULTIPARK_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("golden polynomials for the triangle") {
  RunResult p = run_cli("poly '" + kK3 + "' --m 3 --which P");
  CHECK(p.exit_code == 0);
  CHECK(p.out == "q^-1 + 2\n");

  RunResult pbar = run_cli("poly '" + kK3 + "' --m 3 --which Pbar");
  CHECK(pbar.exit_code == 0);
  CHECK(pbar.out == "q^4 + 2*q^3\n");

  RunResult i = run_cli("poly '" + kK3 + "' --m 3 --which I");
  CHECK(i.exit_code == 0);
  CHECK(i.out == "q + 2\n");
}

TEST_CASE("golden phi output and the psi round trip") {
  RunResult fw = run_cli("phi '" + kK3 + "' --m 3 --f '[0,1,-1]'");
  CHECK(fw.exit_code == 0);
  CHECK(fw.out == "forest: {\"edges\":[[1,2,0],[1,3,0]]}\norder: [3,1,2]\n");

  RunResult bw = run_cli("psi '" + kK3 + "' --m 3 --forest '{\"edges\":[[1,2,0],[1,3,0]]}'");
  CHECK(bw.exit_code == 0);
  CHECK(bw.out == "f: [0,1,-1]\norder: [3,1,2]\n");
}

TEST_CASE("json outputs round-trip through the schemas") {
  RunResult fw = run_cli("phi '" + kK3 + "' --m 3 --f '[0,1,-1]' --format json");
  CHECK(fw.exit_code == 0);
  // feed the forest part back through psi
  auto forest_pos = fw.out.find("\"forest\":");
  REQUIRE(forest_pos != std::string::npos);

  RunResult fwd = run_cli("psi '" + kK3 +
                          "' --m 3 --format json --forest "
                          "'{\"edges\":[[1,2,0],[1,3,0]]}'");
  CHECK(fwd.exit_code == 0);
  CHECK(fwd.out == "{\"f\":[0,1,-1],\"order\":[3,1,2]}\n");

  // graph documents parse back to the same graph
  CHECK(graph_from_json_text(graph_to_json_text(triangle())) == triangle());
  ColoredMultigraph loopy = make_graph(3, {{1, 1}, {1, 2}, {2, 3}, {2, 3}});
  CHECK(graph_from_json_text(graph_to_json_text(loopy)) == loopy);
}

TEST_CASE("enumerate and forests listings") {
  RunResult e = run_cli("enumerate '" + kK3 + "' --m 3");
  CHECK(e.exit_code == 0);
  CHECK(e.out == "[0,0,-1] sum=-1\n[0,1,-1] sum=0\n[1,0,-1] sum=0\n");

  const std::string k4 =
      R"({"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";
  RunResult e4 = run_cli("enumerate '" + k4 + "' --m 4");
  CHECK(e4.exit_code == 0);
  int lines = 0;
  for (char c : e4.out)
    if (c == '\n') ++lines;
  CHECK(lines == 16);

  // backtracking order: a pair is skipped before it is included
  RunResult f = run_cli("forests '" + kK3 + "' --m 3");
  CHECK(f.exit_code == 0);
  CHECK(f.out ==
        "{\"edges\":[[1,3,0],[2,3,0]]}\n"
        "{\"edges\":[[1,2,0],[2,3,0]]}\n"
        "{\"edges\":[[1,2,0],[1,3,0]]}\n");
}

TEST_CASE("verify subcommands pass on the triangle") {
  CHECK(run_cli("verify '" + kK3 + "' --m 3 --check reciprocity").exit_code == 0);
  CHECK(run_cli("verify '" + kK3 + "' --check recursion").exit_code == 0);
  CHECK(run_cli("verify '" + kK3 + "' --check tutte").exit_code == 0);
  CHECK(run_cli("verify '" + kK3 + "' --m 2 --check bijection").exit_code == 0);
  CHECK(run_cli("verify '" + kK3 + "' --m 1 --check corollary").exit_code == 0);

  RunResult rec = run_cli("verify '" + kK3 + "' --check recursion");
  CHECK(rec.out ==
        "check: recursion\nP_recursive: q^-1 + 2\nP_brute: q^-1 + 2\nresult: pass\n");
}

TEST_CASE("corpus command matches the frozen counts and is deterministic") {
  RunResult two = run_cli("corpus --max-n 2 --max-mu 2");
  CHECK(two.exit_code == 0);
  CHECK(two.out ==
        "{\"edges\":[[1,2]],\"n\":2}\n"
        "{\"edges\":[[1,2],[1,2]],\"n\":2}\n");

  RunResult one = run_cli("corpus --max-n 1 --max-mu 1");
  CHECK(one.out == "{\"edges\":[],\"n\":1}\n");

  RunResult three = run_cli("corpus --max-n 3 --max-mu 1");
  CHECK(three.exit_code == 0);
  int lines = 0;
  for (char c : three.out)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // three labeled paths plus the triangle

  RunResult a = run_cli("corpus --max-n 4 --max-mu 2 --count 10 --seed 42");
  RunResult b = run_cli("corpus --max-n 4 --max-mu 2 --count 10 --seed 42");
  CHECK(a.out == b.out);
  RunResult c = run_cli("corpus --max-n 4 --max-mu 2 --count 10 --seed 43");
  CHECK(a.out != c.out);
}

TEST_CASE("exit codes distinguish malformed input from invalid objects") {
  CHECK(run_cli("enumerate 'not json' --m 1").exit_code == 1);
  CHECK(run_cli("enumerate '{\"n\":0,\"edges\":[]}'").exit_code == 1);
  CHECK(run_cli("enumerate '" + kK3 + "' --m 9").exit_code == 1);
  CHECK(run_cli("poly '" + kK3 + "' --m 3 --which X").exit_code == 1);
  CHECK(run_cli("phi '" + kK3 + "' --m 3 --f '[0,1,-1]' --ranking 1,1,2").exit_code == 1);
  // structurally fine but semantically invalid inputs exit 2
  CHECK(run_cli("phi '" + kK3 + "' --m 3 --f '[1,1,-1]'").exit_code == 2);
  CHECK(run_cli("psi '" + kK3 + "' --m 3 --forest '{\"edges\":[[1,2,0],[1,3,0],[2,3,0]]}'")
            .exit_code == 2);
  // disconnected graph is rejected as bad input
  CHECK(run_cli("enumerate '{\"n\":2,\"edges\":[]}' --m 1").exit_code == 1);
}

TEST_CASE("identical invocations are byte-identical") {
  std::string inv = "enumerate '" + kK3 + "' --m 1 --format json";
  CHECK(run_cli(inv).out == run_cli(inv).out);
}

TEST_CASE("malformed documents raise invalid_argument at the library level") {
  CHECK_THROWS_AS(graph_from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_text("{\"edges\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_text("{\"n\":2,\"edges\":[[1]]}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_text("{\"n\":2,\"edges\":[[1,\"a\"]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(int_array_from_json_text("{\"a\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(forest_from_json_text("{\"edges\":[[1,2]]}", 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json_text("{\"x\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json_text("{\"0\":1.5}"), std::invalid_argument);
}
