#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "anderson/cli.hpp"
#include "anderson/literals.hpp"

using namespace anderson;

namespace {

struct RunResult {
  int code;
  std::string text;
  nlohmann::json json;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = run_command(args, out);
  return RunResult{code, out.str(), nlohmann::json::parse(out.str())};
}

/// Writes a scenario file next to the test binary and removes it on exit.
struct TempScenarioFile {
  std::string path;
  explicit TempScenarioFile(const std::string& name,
                           const std::string& content)
      : path("cli_tmp_" + name + ".scen") {
    std::ofstream out(path);
    out << content;
  }
  ~TempScenarioFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ring literals round-trip and reject junk") {
  CHECK(format_ring(parse_ring("Z6")) == "Z6");
  CHECK(format_ring(parse_ring("z4xz9")) == "Z4xZ9");
  CHECK(format_ring(parse_ring("Z2XZ3")) == "Z2xZ3");
  CHECK(parse_ring("Z6") == RingSpec({6}));
  CHECK(parse_ring("Z4xZ9") == RingSpec({4, 9}));
  CHECK_THROWS_AS(parse_ring(""), ParseError);
  CHECK_THROWS_AS(parse_ring("Z1"), ParseError);
  CHECK_THROWS_AS(parse_ring("Z0"), ParseError);
  CHECK_THROWS_AS(parse_ring("Zx"), ParseError);
  CHECK_THROWS_AS(parse_ring("Z6x"), ParseError);
  CHECK_THROWS_AS(parse_ring("Q"), ParseError);
}

TEST_CASE("element literals cover diagonal and coordinate forms") {
  RingSpec prod({4, 9});
  CHECK(format_elem(parse_elem(prod, "1:7")) == "1:7");
  CHECK(parse_elem(prod, "5").coords() == std::vector<long long>{1, 5});
  CHECK(format_elem(parse_elem(RingSpec({6}), "11")) == "5");
  CHECK_THROWS_AS(parse_elem(prod, "1:2:3"), ParseError);
  CHECK_THROWS_AS(parse_elem(prod, "a"), ParseError);
}

TEST_CASE("polynomial literals round-trip through parse and format") {
  RingSpec ring({6});
  for (const char* text : {"X", "2X^2+X+3", "5X^3+1", "0", "3", "X^4+5X"}) {
    Poly p = parse_poly(ring, text);
    CHECK(format_poly(p) == text);
    CHECK(parse_poly(ring, format_poly(p)) == p);
  }
  // Non-canonical spellings normalize.
  CHECK(format_poly(parse_poly(ring, "X+X")) == "2X");
  CHECK(format_poly(parse_poly(ring, "7X^2")) == "X^2");
  CHECK(format_poly(parse_poly(ring, "6")) == "0");
  CHECK(format_poly(parse_poly(ring, "X^2-X")) == "X^2+5X");
  RingSpec prod({2, 3});
  Poly q = parse_poly(prod, "(1:2)X^2+(0:1)");
  CHECK(format_poly(q) == "(1:2)X^2+(0:1)");
  CHECK_THROWS_AS(parse_poly(ring, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(ring, "X^"), ParseError);
  CHECK_THROWS_AS(parse_poly(ring, "2X^2++1"), ParseError);
  CHECK_THROWS_AS(parse_poly(ring, "Y"), ParseError);
}

TEST_CASE("fraction and ideal-spec literals round-trip") {
  LocElem x = parse_fraction("(X+2)/(2X+1)@Z6:A");
  CHECK(format_fraction(x) == "(X+2)/(2X+1)@Z6:A");
  CHECK(x.kind() == MultSetKind::ConstantTermOne);
  LocElem no_den = parse_fraction("(3X)@Z4:A");
  CHECK(no_den.den() == parse_poly(RingSpec({4}), "1"));
  CHECK(parse_fraction("(2)/(X+1)@Z6:Utilde").kind() ==
        MultSetKind::UnitLowestCoeff);
  CHECK_THROWS_AS(parse_fraction("(X)/(2X)@Z6:A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("(X)@Z6"), ParseError);
  CHECK_THROWS_AS(parse_fraction("(X)@Z6:B"), ParseError);

  RingSpec ring({6});
  LocIdeal ext = parse_ideal_spec(ring, "(2,3)");
  CHECK(ext.shape() == LocIdeal::Shape::ExtensionOfR);
  CHECK(format_ideal_spec(ext) == "(2,3)");
  LocIdeal top = parse_ideal_spec(ring, "(2)+X");
  CHECK(top.shape() == LocIdeal::Shape::IPlusX);
  CHECK(format_ideal_spec(top) == "(2)+X");
  LocIdeal gen = parse_ideal_spec(ring, "[X^2+1; 2X]");
  CHECK(gen.shape() == LocIdeal::Shape::General);
  CHECK(format_ideal_spec(gen) == "[X^2+1; 2X]");
  // The empty generator list is the zero ideal.
  LocIdeal zero = parse_ideal_spec(ring, "()");
  CHECK(zero.shape() == LocIdeal::Shape::ExtensionOfR);
  CHECK(zero.base_ideal().is_zero());
  CHECK_THROWS_AS(parse_ideal_spec(ring, "2+X"), ParseError);
  CHECK_THROWS_AS(parse_ideal_spec(ring, "(2"), ParseError);
  CHECK_THROWS_AS(parse_ideal_spec(ring, "(2)+Y"), ParseError);

  for (const char* kind : {"A", "Abar", "N", "U", "Utilde"}) {
    CHECK(format_kind(parse_kind(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_kind("M"), ParseError);
}

TEST_CASE("every success envelope carries command, outcome and report") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"spectrum", "Z6"},
           {"check", "Z6", "vnr"},
           {"member", "(2)/(1)@Z6:A", "(2)"},
           {"gen-search", "Z6", "(2)+X", "--degree", "1"},
           {"theorem", "pir2", "Z6"},
       }) {
    RunResult r = run(args);
    CHECK(r.code == 0);
    REQUIRE(r.json.contains("command"));
    CHECK(r.json["command"] == args[0]);
    CHECK(r.json.contains("outcome"));
    CHECK(r.json.contains("report"));
  }
}

TEST_CASE("json output round-trips byte for byte") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"spectrum", "Z30", "--samples", "6", "--seed", "11"},
           {"theorem", "gaussian", "Z4", "--trials", "40", "--seed", "2"},
           {"gen-search", "Z4", "(2)+X", "--degree", "2"},
       }) {
    RunResult r = run(args);
    std::string rendered = r.json.dump(2) + "\n";
    CHECK(rendered == r.text);
  }
}

TEST_CASE("identical argv produces identical bytes") {
  std::vector<std::string> args = {"spectrum", "Z12", "--samples", "10",
                                   "--seed", "77"};
  CHECK(run(args).text == run(args).text);
  std::vector<std::string> gauss = {"theorem", "gaussian", "Z6",
                                    "--trials", "60", "--seed", "5"};
  CHECK(run(gauss).text == run(gauss).text);
}

TEST_CASE("member reports all three verdicts with the right outcomes") {
  RunResult member = run({"member", "(X+2)/(2X+1)@Z6:A", "(2)+X"});
  CHECK(member.code == 0);
  CHECK(member.json["outcome"] == "member");
  CHECK(member.json["report"]["result"]["status"] == "member");
  CHECK(member.json["report"]["result"].contains("witness"));

  RunResult not_member = run({"member", "(X+2)/(2X+1)@Z6:A", "(3)+X"});
  CHECK(not_member.code == 0);
  CHECK(not_member.json["outcome"] == "not-member");

  RunResult open = run({"member", "(2X)/(1)@Z4:A", "[X^2+2X]", "--degree",
                        "3"});
  CHECK(open.code == 0);
  CHECK(open.json["outcome"] == "not-found-up-to(3)");

  RunResult cut = run({"member", "(2X)/(1)@Z4:A", "[X^2]"});
  CHECK(cut.code == 0);
  CHECK(cut.json["outcome"] == "not-member");
  CHECK(cut.json["report"]["result"]["rule"] == "low-order-cut");
}

TEST_CASE("gen-search outcomes name the generator or the exhausted bound") {
  RunResult found = run({"gen-search", "Z6", "(2)+X", "--degree", "1"});
  CHECK(found.code == 0);
  CHECK(found.json["outcome"] == "generator(X+2)");
  CHECK(found.json["report"]["search"]["candidates_examined"] == 9);
  CHECK(found.json["report"]["search"]["found"] == true);

  RunResult missing = run({"gen-search", "Z4", "(2)+X", "--degree", "3"});
  CHECK(missing.code == 0);
  CHECK(missing.json["outcome"] == "not-found-up-to(3)");
  CHECK(missing.json["report"]["search"]["candidates_examined"] == 128);

  RunResult wrong_shape = run({"gen-search", "Z6", "(2)"});
  CHECK(wrong_shape.code == 2);
  CHECK(wrong_shape.json.contains("error"));
}

TEST_CASE("theorem commands aggregate over the ideal lattice") {
  RunResult all = run({"theorem", "contraction", "Z12"});
  CHECK(all.code == 0);
  CHECK(all.json["outcome"] == "verified");
  CHECK(all.json["report"]["verdicts"].size() == 6);  // divisor lattice of 12

  RunResult one = run({"theorem", "contraction", "Z12", "--ideal", "(2)"});
  CHECK(one.code == 0);
  CHECK(one.json["report"]["verdicts"].size() == 1);

  RunResult counted = run({"theorem", "generator-count", "Z6"});
  CHECK(counted.code == 0);
  CHECK(counted.json["outcome"] == "verified");

  RunResult local = run({"theorem", "locally-principal", "Z2xZ9"});
  CHECK(local.code == 0);
  CHECK(local.json["outcome"] == "verified");
}

TEST_CASE("usage and parse failures exit with code two and one error object") {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate", "Z6"},
           {"spectrum"},
           {"spectrum", "Z6", "Z7"},
           {"spectrum", "NOTaRING"},
           {"spectrum", "Z6", "--samples", "many"},
           {"spectrum", "Z6", "--bogus", "1"},
           {"check", "Z6", "noetherian"},
           {"member", "(X//@Z6:A", "(2)"},
           {"member", "(X)@Z6:A", "(2)+Y"},
           {"member", "(X)@Z6:A", "(2)", "--degree", "-1"},
           {"gen-search", "Z6"},
           {"theorem", "fermat", "Z6"},
           {"scenarios", "/nonexistent/path.scen"},
       }) {
    RunResult r = run(args);
    CHECK(r.code == 2);
    CHECK(r.json.contains("error"));
    CHECK_FALSE(r.json.contains("report"));
  }
}

TEST_CASE("the cardinality cap env var trips exit code three") {
  setenv("ANDERSON_CAP", "10", 1);
  RunResult r = run({"spectrum", "Z30"});
  CHECK(r.code == 3);
  CHECK(r.json["error"] == "ring too large");
  RunResult fine = run({"spectrum", "Z6"});
  CHECK(fine.code == 0);
  setenv("ANDERSON_CAP", "-3", 1);
  CHECK(run({"spectrum", "Z6"}).code == 2);
  unsetenv("ANDERSON_CAP");
  CHECK(run({"spectrum", "Z30"}).code == 0);
}

TEST_CASE("scenario files run in order and compare expectations") {
  TempScenarioFile file("basic",
                        "# a comment\n"
                        "\n"
                        "first | Z6 | spectrum | | maximal=2\n"
                        "second | Z6 | gen-search | ideal=(2)+X degree=1 | "
                        "generator(X+2)\n"
                        "third | Z6 | check vnr | | true\n"
                        "fourth | Z6 | member | fraction=(2)/(1)@Z6:A "
                        "ideal=(2)\n");
  RunResult r = run({"scenarios", file.path});
  CHECK(r.code == 0);
  CHECK(r.json["outcome"] == "passed=4/4");
  CHECK(r.json["report"]["total"] == 4);
  CHECK(r.json["report"]["failed"] == 0);
  auto rows = r.json["report"]["scenarios"];
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["name"] == "first");
  CHECK(rows[1]["name"] == "second");
  CHECK(rows[2]["name"] == "third");
  CHECK(rows[3]["name"] == "fourth");
  // Rows without an expectation pass on a non-refuted outcome and do not
  // echo an expected field.
  CHECK_FALSE(rows[3].contains("expected"));
}

TEST_CASE("an empty scenario file is an empty passing report") {
  TempScenarioFile file("empty", "# nothing here\n\n");
  RunResult r = run({"scenarios", file.path});
  CHECK(r.code == 0);
  CHECK(r.json["outcome"] == "passed=0/0");
  CHECK(r.json["report"]["scenarios"].empty());
}

TEST_CASE("a failed expectation fails the run with the full report attached") {
  TempScenarioFile file("mismatch",
                        "hopeful | Z4 | theorem pir2 | degree=2 | verified\n"
                        "fine | Z4 | spectrum | | maximal=1\n");
  RunResult r = run({"scenarios", file.path});
  CHECK(r.code == 1);
  CHECK(r.json["outcome"] == "passed=1/2");
  auto rows = r.json["report"]["scenarios"];
  CHECK(rows[0]["pass"] == false);
  CHECK(rows[0]["outcome"] == "bounded-consistent(2)");
  CHECK(rows[0]["expected"] == "verified");
  CHECK(rows[0].contains("report"));  // evidence for the mismatch
  CHECK(rows[1]["pass"] == true);
}

TEST_CASE("scenario parse failures exit two and carry the line number") {
  TempScenarioFile missing_fields("short", "only-a-name | Z6\n");
  RunResult r1 = run({"scenarios", missing_fields.path});
  CHECK(r1.code == 2);
  CHECK(r1.json["line"] == 1);

  TempScenarioFile dup("dup",
                       "again | Z6 | spectrum |\n"
                       "again | Z4 | spectrum |\n");
  RunResult r2 = run({"scenarios", dup.path});
  CHECK(r2.code == 2);
  CHECK(r2.json["line"] == 2);
  CHECK(r2.json["error"].get<std::string>().find("duplicate") !=
        std::string::npos);

  TempScenarioFile bad_param("param", "p | Z6 | spectrum | seed\n");
  RunResult r3 = run({"scenarios", bad_param.path});
  CHECK(r3.code == 2);
  CHECK(r3.json["line"] == 1);

  TempScenarioFile bad_ring("ring",
                            "ok | Z6 | spectrum |\n"
                            "broken | Zx7 | spectrum |\n");
  RunResult r4 = run({"scenarios", bad_ring.path});
  CHECK(r4.code == 2);
  CHECK(r4.json["line"] == 2);

  TempScenarioFile ring_clash(
      "clash", "m | Z4 | member | fraction=(2)/(1)@Z6:A ideal=(2)\n");
  RunResult r5 = run({"scenarios", ring_clash.path});
  CHECK(r5.code == 2);
  CHECK(r5.json["line"] == 1);
}

TEST_CASE("scenario rows hitting the cap report it as their outcome") {
  TempScenarioFile file("cap",
                        "big | Z30 | spectrum | | cap-exceeded\n"
                        "ok | Z6 | spectrum | | maximal=2\n");
  setenv("ANDERSON_CAP", "10", 1);
  RunResult r = run({"scenarios", file.path});
  unsetenv("ANDERSON_CAP");
  CHECK(r.code == 0);
  CHECK(r.json["outcome"] == "passed=2/2");
}

TEST_CASE("check answers the five predicates") {
  CHECK(run({"check", "Z6", "vnr"}).json["outcome"] == "true");
  CHECK(run({"check", "Z6", "reduced"}).json["outcome"] == "true");
  CHECK(run({"check", "Z6", "pir"}).json["outcome"] == "true");
  CHECK(run({"check", "Z6", "local"}).json["outcome"] == "false");
  CHECK(run({"check", "Z6", "field"}).json["outcome"] == "false");
  CHECK(run({"check", "Z4", "local"}).json["outcome"] == "true");
  CHECK(run({"check", "Z5", "field"}).json["outcome"] == "true");
}

TEST_CASE("spectrum reports the maximal count in its outcome") {
  RunResult r = run({"spectrum", "Z30"});
  CHECK(r.code == 0);
  CHECK(r.json["outcome"] == "maximal=3");
  CHECK(r.json["report"]["tops"].size() == 3);
  CHECK(r.json["report"]["chains"].size() == 3);
}
