#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "run_cli.hpp"

using testsupport::CliResult;
using testsupport::run_cli;

namespace {

const std::string kBin = AGTOP_BIN;
const std::string kData = AGTOP_TEST_DATA;
const std::string kGolden = AGTOP_GOLDEN;

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("check command", "[cli]") {
  CliResult ok = run_cli(kBin + " check " + data("z3.agt"));
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("left-invertive: OK") != std::string::npos);
  REQUIRE(ok.out.find("medial: OK") != std::string::npos);
  REQUIRE(ok.out.find("left identities: {0}") != std::string::npos);
  REQUIRE(ok.out.find("zero: none") != std::string::npos);

  CliResult fail = run_cli(kBin + " check " + data("leftzero2.agt"));
  REQUIRE(fail.code == 3);
  REQUIRE(fail.out.find("left-invertive: FAIL witness (0,0,1)") != std::string::npos);

  CliResult bad = run_cli(kBin + " check " + data("bad_entry.agt"));
  REQUIRE(bad.code == 2);
  REQUIRE(bad.out.find("line 3") != std::string::npos);

  CliResult json = run_cli(kBin + " check --json " + data("z6.agt"));
  REQUIRE(json.code == 0);
  auto parsed = nlohmann::json::parse(json.out);
  REQUIRE(parsed["leftInvertive"]["holds"] == true);
  REQUIRE(parsed["zero"] == 0);
  REQUIRE(parsed["leftIdentities"] == nlohmann::json::parse("[1]"));
}

TEST_CASE("canon command round-trips a canonical file", "[cli]") {
  CliResult canon = run_cli(kBin + " canon " + data("z3.agt"));
  REQUIRE(canon.code == 0);
  REQUIRE(canon.out == slurp(data("z3.agt")));
}

TEST_CASE("ideals command", "[cli]") {
  CliResult ok = run_cli(kBin + " ideals --kind=two-sided " + data("z6.agt"));
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("{0,3}") != std::string::npos);
  REQUIRE(ok.out.find("5 two-sided member(s)") != std::string::npos);

  CliResult bi = run_cli(kBin + " ideals --kind=bi " + data("z3.agt"));
  REQUIRE(bi.code == 0);
  REQUIRE(bi.out.find("{0,1,2}") != std::string::npos);
  REQUIRE(bi.out.find("1 bi member(s)") != std::string::npos);

  CliResult invalid = run_cli(kBin + " ideals --kind=bi " + data("leftzero2.agt"));
  REQUIRE(invalid.code == 3);

  CliResult pred = run_cli(kBin + " ideals --kind=left --predicates --json "
                           + data("z6.agt"));
  REQUIRE(pred.code == 0);
  auto parsed = nlohmann::json::parse(pred.out);
  REQUIRE(parsed["count"] == 5);
  REQUIRE(parsed["family"][0]["members"] == nlohmann::json::parse("[0]"));
  REQUIRE(parsed["family"][0]["prime"] == false);
  REQUIRE(parsed["family"][0]["semiprime"] == true);
  REQUIRE(parsed["family"][0]["quasiPrime"] == false);
  REQUIRE(parsed["family"][2]["members"] == nlohmann::json::parse("[0,2,4]"));
  REQUIRE(parsed["family"][2]["prime"] == true);

  // The subset cap surfaces as exit 5 when lowered below the table order.
  CliResult capped = run_cli("AGTOP_MAX_N=4 " + kBin + " ideals --kind=bi "
                             + data("z6.agt"));
  REQUIRE(capped.code == 5);

  // Raising the cap unlocks larger universes (hard cap 20).
  CliResult over_default = run_cli(kBin + " ideals --kind=left " + data("z17.agt"));
  REQUIRE(over_default.code == 5);
  CliResult raised = run_cli("AGTOP_MAX_N=17 " + kBin + " ideals --kind=left "
                             + data("z17.agt"));
  REQUIRE(raised.code == 0);
  REQUIRE(raised.out.find("1 left member(s)") != std::string::npos);
}

TEST_CASE("topology command", "[cli]") {
  CliResult spec = run_cli(kBin + " topology --space=spectrum --json "
                           + data("z6.agt"));
  REQUIRE(spec.code == 0);
  REQUIRE(spec.out == slurp(kGolden + "/z6_spectrum.json"));

  CliResult text = run_cli(kBin + " topology --space=omega " + data("z6.agt"));
  REQUIRE(text.code == 0);
  REQUIRE(text.out.find("points (3): {0,3} {0,2,4} {0,2,3,4}") != std::string::npos);
  REQUIRE(text.out.find("verify-topology: holds") != std::string::npos);
  REQUIRE(text.out.find("phi-preservation: holds") != std::string::npos);

  CliResult na = run_cli(kBin + " topology --space=spectrum " + data("z3.agt"));
  REQUIRE(na.code == 0);
  REQUIRE(na.out.find("not-applicable: no zero") != std::string::npos);

  CliResult dot = run_cli(kBin + " topology --space=spectrum --dot "
                          + data("z6.agt"));
  REQUIRE(dot.code == 0);
  REQUIRE(dot.out ==
          "digraph specialization {\n"
          "  0 [label=\"{0,3}\"];\n"
          "  1 [label=\"{0,2,4}\"];\n"
          "  2 [label=\"{0,2,3,4}\"];\n"
          "  2 -> 0;\n"
          "  2 -> 1;\n"
          "}\n");
}

TEST_CASE("enumerate command", "[cli]") {
  CliResult one = run_cli(kBin + " enumerate --order=1");
  REQUIRE(one.code == 0);
  REQUIRE(one.out == "1\n0\n");

  CliResult two = run_cli(kBin + " enumerate --order=2");
  REQUIRE(two.code == 0);
  REQUIRE(two.out ==
          "2\n0 0\n0 0\n---\n"
          "2\n0 0\n0 1\n---\n"
          "2\n0 1\n1 0\n---\n"
          "2\n0 1\n1 1\n---\n"
          "2\n1 0\n0 1\n---\n"
          "2\n1 1\n1 1\n");

  CliResult over = run_cli(kBin + " enumerate --order=9");
  REQUIRE(over.code == 1);

  CliResult census = run_cli(kBin + " enumerate --order=2 --census");
  REQUIRE(census.code == 0);
  auto parsed = nlohmann::json::parse(census.out);
  REQUIRE(parsed["total"] == 6);
  REQUIRE(parsed["withLeftIdentity"] == 4);
  REQUIRE(parsed["withZero"] == 4);
  REQUIRE(parsed["antiRectangular"] == 2);
  REQUIRE(parsed["associative"] == 6);
  REQUIRE(parsed["nonAssociative"] == 0);

  CliResult limited = run_cli(kBin + " enumerate --order=3 --limit=2 --iso");
  REQUIRE(limited.code == 0);
  REQUIRE(limited.out == "3\n0 0 0\n0 0 0\n0 0 0\n---\n3\n0 0 0\n0 0 0\n0 0 1\n");
}

TEST_CASE("verify command", "[cli]") {
  CliResult ok = run_cli(kBin + " verify --order=2 --claims=C1 --json");
  REQUIRE(ok.code == 0);
  auto parsed = nlohmann::json::parse(ok.out);
  REQUIRE(parsed["corpusSize"] == 6);
  REQUIRE(parsed["claims"]["C1"]["holds"] == 6);

  // C26 has pinned violations at order 3, so the exit signals them.
  CliResult violated = run_cli(kBin + " verify --order=3 --claims=C26 --json");
  REQUIRE(violated.code == 4);
  auto vparsed = nlohmann::json::parse(violated.out);
  REQUIRE(vparsed["claims"]["C26"]["violated"] == 24);

  CliResult unknown = run_cli(kBin + " verify --order=2 --claims=C99");
  REQUIRE(unknown.code == 1);

  CliResult file = run_cli(kBin + " verify " + data("z6.agt") + " --claims=C12");
  REQUIRE(file.code == 0);
  REQUIRE(file.out.find("C12") != std::string::npos);
  REQUIRE(file.out.find("holds=1") != std::string::npos);

  CliResult none = run_cli(kBin + " verify");
  REQUIRE(none.code == 1);
}

TEST_CASE("json outputs are stable across runs", "[cli]") {
  const std::string cmd = kBin + " topology --space=spectrum --json "
                          + data("z6.agt");
  CliResult a = run_cli(cmd);
  CliResult b = run_cli(cmd);
  REQUIRE(a.out == b.out);

  const std::string vcmd = kBin + " verify --order=2 --json";
  REQUIRE(run_cli(vcmd).out == run_cli(vcmd).out);
}
