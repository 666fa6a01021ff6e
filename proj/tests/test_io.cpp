#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mggs/errors.hpp"
#include "mggs/examples.hpp"
#include "mggs/io.hpp"

using namespace mggs;

#ifndef MGGS_GOLDEN_DIR
#define MGGS_GOLDEN_DIR "tests/golden"
#endif

TEST_CASE("portrait round trip") {
  std::mt19937_64 rng(5);
  for (Residue p : {3u, 5u, 7u})
    for (unsigned d = 0; d <= 3; ++d) {
      std::vector<AffineLabel> ls(portrait_size(p, d));
      for (auto& l : ls) l = {static_cast<std::uint16_t>(1 + rng() % (p - 1)), static_cast<std::uint16_t>(rng() % p)};
      const Portrait g(p, d, ls);
      CHECK(portrait_from_json(parse_json(portrait_to_json(g).dump())) == g);
    }
  const auto j = portrait_to_json(Portrait::rooted(AffineLabel::shift(1, 3), 3, 2));
  CHECK(j.dump() == R"({"depth":2,"labels":[[1,1],[1,0],[1,0],[1,0]],"p":3})");
}

TEST_CASE("portrait parse errors") {
  CHECK_THROWS_AS(portrait_from_json(parse_json(R"({"p":3,"depth":1})")), ParseError);
  CHECK_THROWS_AS(portrait_from_json(parse_json(R"({"p":3,"depth":1,"labels":[[1]]})")), ParseError);
  CHECK_THROWS_AS(portrait_from_json(parse_json(R"({"p":3,"depth":2,"labels":[[1,0]]})")), DimensionError);
  CHECK_THROWS_AS(portrait_from_json(parse_json(R"({"p":3,"depth":1,"labels":[[0,0]]})")), DomainError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("group round trip") {
  for (const auto& ng : named_groups()) CHECK(group_from_json(parse_json(group_to_json(ng.group).dump())) == ng.group);
  CHECK(group_from_json(parse_json(R"({"p":5,"rows":[[1,2,2,1]]})")) == example1());
  CHECK_THROWS_AS(group_from_json(parse_json(R"({"p":5,"rows":[[1,2,2]]})")), DimensionError);
  CHECK_THROWS_AS(group_from_json(parse_json(R"({"p":5})")), ParseError);
}

TEST_CASE("Aut report round trip") {
  for (const auto& ng : named_groups()) {
    const auto r = aut_structure(ng.group);
    CHECK(aut_report_from_json(parse_json(aut_report_to_json(r).dump())) == r);
  }
  const auto j = aut_report_to_json(aut_structure(example1()));
  CHECK(j.at("classification") == "symmetric");
  CHECK(j.at("U") == Json::array({1, 4}));
  CHECK(j.at("W") == Json::array({1}));
  CHECK(j.at("structure") == "(G ⋊ C_5) ⋊ C_2");
  CHECK(j.at("scalars").contains("4"));
}

TEST_CASE("check result JSON lines") {
  CheckResult a{"global_equations", 3, {{1, 2}}, 2, true, "", "27 elements", 1.25, std::nullopt};
  CheckResult b{"order_p", 5, {{1, 2, 2, 1}}, 3, false, "x = a * b", "", 0.1 + 0.2, 42u};
  const std::string lines = to_json_lines({a, b});
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
  const auto back = from_json_lines(lines);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == a);
  CHECK(back[1] == b);
  CHECK(check_result_to_json(a).at("witness").is_null());
  CHECK(check_result_to_json(b).at("seed") == 42);
  CHECK_THROWS_AS(from_json_lines("{\"check\":1}\n"), ParseError);
}

TEST_CASE("inline rows") {
  const auto rows = parse_rows(5, "1,2,2,1; 0,1,1,0");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == FpVec(5, {0, 1, 1, 0}));
  CHECK(parse_rows(5, "-1,2,2,-1")[0] == FpVec(5, {4, 2, 2, 4}));
  CHECK_THROWS_AS(parse_rows(5, ""), ParseError);
  CHECK_THROWS_AS(parse_rows(5, "1,x,2,1"), ParseError);
  CHECK_THROWS_AS(parse_rows(5, "1,2;;2"), ParseError);
  CHECK_THROWS_AS(parse_rows(5, "1.5,2"), ParseError);
}

TEST_CASE("quotient dump matches the golden file") {
  std::ifstream in(std::string(MGGS_GOLDEN_DIR) + "/gs3_quotient_depth2.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto g = gupta_sidki(3);
  const auto dump = quotient_to_json(enumerate_quotient(g, standard_generators(g), 2));
  CHECK(dump == parse_json(ss.str()));
  CHECK(dump.size() == 27);
}
