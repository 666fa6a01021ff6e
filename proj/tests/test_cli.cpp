#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mggs/cli.hpp"
#include "mggs/io.hpp"

using namespace mggs;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kEx3Rows =
    "1,2,11,3,12,10,10,12,3,11,2,1;"
    "11,10,3,1,2,12,12,2,1,3,10,11;"
    "3,12,1,11,10,2,2,10,11,1,12,3";

}  // namespace

TEST_CASE("classify") {
  CHECK(cli({"classify", "-p", "5", "-E", "1,2,2,1"}).out == "symmetric\n");
  CHECK(cli({"classify", "-p", "5", "-E", "1,2,3,4"}).out == "regular\n");
  const auto c = cli({"classify", "-p", "3", "-E", "1,1"});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "constant (excluded from Aut computation)\n");
  const auto j = parse_json(cli({"classify", "--json", "-p", "3", "-E", "1,1"}).out);
  CHECK(j.at("classification") == "constant");
  CHECK(j.at("excluded") == true);
}

TEST_CASE("uvw for the p = 13 example") {
  const auto r = cli({"uvw", "-p", "13", "-E", kEx3Rows});
  INFO(r.err);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("|U| = 12") != std::string::npos);
  CHECK(r.out.find("V = {1, 5, 8, 12}  |V| = 4") != std::string::npos);
  CHECK(r.out.find("|W| = 2") != std::string::npos);
  CHECK(cli({"uvw", "-g", "ex3"}).out == r.out);
}

TEST_CASE("aut report, text and JSON") {
  const auto t = cli({"aut", "-g", "ex1"});
  CHECK(t.out.find("structure: Aut(G) = (G ⋊ C_5) ⋊ C_2") != std::string::npos);
  CHECK(t.out.find("flag: minus_one_in_U_acts_trivially") != std::string::npos);
  const auto j = cli({"aut", "--json", "-p", "5", "-E", "1,2,3,4"});
  const auto rep = aut_report_from_json(parse_json(j.out));
  CHECK(rep.structure == "(G ⋊ ∏_ω C_5) ⋊ (C_4)²");
  CHECK(aut_report_to_json(rep) == parse_json(j.out));
  // the top-level flag placement also works
  CHECK(cli({"--json", "aut", "-g", "gs3"}).out == cli({"aut", "--json", "-g", "gs3"}).out);
}

TEST_CASE("constant groups are refused by aut and uvw") {
  for (const char* cmd : {"aut", "uvw"}) {
    const auto r = cli({cmd, "-p", "3", "-E", "1,1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("constant group is excluded") != std::string::npos);
  }
}

TEST_CASE("group from a file") {
  const std::string path = "cli_test_group.json";
  std::ofstream(path) << R"({"p": 5, "rows": [[1, 2, 2, 1]]})";
  CHECK(cli({"classify", "--file", path}).out == "symmetric\n");
  std::remove(path.c_str());
  CHECK(cli({"classify", "--file", "does_not_exist.json"}).code == kExitUsage);
}

TEST_CASE("portrait and section") {
  const auto p = cli({"portrait", "-g", "gs3", "-w", "b", "-d", "2"});
  CHECK(p.out == "level 0: (1,0)\nlevel 1: (1,0) (1,1) (1,2)\n");
  const auto j = parse_json(cli({"portrait", "--json", "-g", "gs3", "-w", "a", "-d", "1"}).out);
  CHECK(portrait_from_json(j) == Portrait::rooted(AffineLabel::shift(1, 3), 3, 1));
  const auto s = cli({"section", "-g", "gs3", "-w", "b", "-v", "0", "-d", "2"});
  CHECK(s.out == "word: b[1]\nlevel 0: (1,0)\nlevel 1: (1,0) (1,1) (1,2)\n");
  const auto s1 = cli({"section", "-g", "gs3", "-w", "b", "-v", "2", "-d", "1"});
  CHECK(s1.out == "word: a^2\nlevel 0: (1,2)\n");
  // a is not in the stabiliser: no symbolic section, portrait only
  CHECK(cli({"section", "-g", "gs3", "-w", "a", "-v", "1", "-d", "1"}).out == "level 0: (1,0)\n");
  CHECK(cli({"section", "-g", "gs3", "-w", "b", "-v", "3", "-d", "1"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto ok = cli({"verify", "global_equations", "-g", "gs3"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("PASS global_equations", 0) == 0);
  const auto bad = cli({"verify", "global_equations_mutant", "-g", "gs3"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.out.find("witness: word ") != std::string::npos);
  const auto j = cli({"verify", "contraction", "-g", "ex1", "--seed", "17", "--trials", "50", "--json"});
  const auto rs = from_json_lines(j.out);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].seed == 17u);
  CHECK(rs[0].passed);
  CHECK(cli({"verify", "centralizer", "-d", "1"}).code == kExitOk);
  CHECK(cli({"verify", "centralizer", "-d", "1", "--serial"}).out.find("_serial") != std::string::npos);
  CHECK(cli({"verify", "no_such_check", "-g", "gs3"}).code == kExitUsage);
  CHECK(cli({"verify", "order_p", "-p", "3", "-E", "1,1"}).code == kExitUsage);
}

TEST_CASE("examples catalog") {
  const auto r = cli({"examples"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("ex3  perm_apply(b1, 5) == -b1 = true  ok") != std::string::npos);
  const auto j = parse_json(cli({"examples", "--json"}).out);
  CHECK(j.size() > 50);
  for (const auto& line : j) CHECK(line.at("ok") == true);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"classify"}).code == kExitUsage);
  CHECK(cli({"classify", "-E", "1,2,2,1"}).code == kExitUsage);
  CHECK(cli({"classify", "-p", "5", "-E", "1,2,2"}).code == kExitUsage);
  CHECK(cli({"classify", "-p", "5", "-E", "1,2,2,1;2,4,4,2"}).code == kExitUsage);
  CHECK(cli({"classify", "-p", "6", "-E", "1,2,2,1,1"}).code == kExitUsage);
  CHECK(cli({"classify", "-p", "5", "-E", "1,2,2,1", "-g", "ex1"}).code == kExitUsage);
  CHECK(cli({"portrait", "-g", "gs3", "-w", "a^", "-d", "2"}).code == kExitUsage);
  CHECK(cli({"portrait", "-g", "gs3", "-w", "a"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}
