#include <doctest.h>

#include <json.hpp>

#include "biqtor/problem.hpp"

using namespace biqtor;
using nlohmann::json;

namespace {

const char* kSu3Strict = R"({
  "schema_version": 1,
  "group": {"factors": [{"type": "SU", "n": 3}]},
  "subgroup1": {"cocharacters": []},
  "subgroup2": {"cocharacters": [[1, -1]]}
})";

}  // namespace

TEST_CASE("spec parsing and validation") {
  BiquotientSpec spec = parse_spec(kSu3Strict);
  CHECK(spec.group.rank() == 2);
  CHECK(spec.subgroup1.kind == SubgroupInput::Kind::Cocharacters);
  TorusSubgroup s2 = spec.subgroup2.realize(2);
  CHECK(s2.rank() == 1);

  CHECK_THROWS_AS(parse_spec("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("{}"), std::invalid_argument);  // schema_version mandatory
  CHECK_THROWS_AS(parse_spec(R"({"schema_version": 2, "group": {"factors": []},
    "subgroup1": {"k_basis": []}, "subgroup2": {"k_basis": []}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"schema_version": 1, "group": {"factors": []},
    "subgroup1": {"rows": []}, "subgroup2": {"k_basis": []}})"),
                  std::invalid_argument);
  // row width must match the group rank
  CHECK_THROWS_AS(parse_spec(R"({"schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 3}]},
    "subgroup1": {"k_basis": [[1]]}, "subgroup2": {"k_basis": []}})"),
                  std::invalid_argument);
}

TEST_CASE("check command on the strict SU(3) example") {
  RunResult r = run_command(Command::Check, parse_spec(kSu3Strict));
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep["schema_version"] == 1);
  CHECK(rep["classification"]["verdict"] == "strict");
  CHECK(rep["intersection_rank"] == 0);
  CHECK(rep["vanishing_bound"] == 1);
}

TEST_CASE("tor command on the circle: exact path and consistency") {
  RunResult r = run_command(Command::Tor, parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "torus", "rank": 1}]},
    "subgroup1": {"cocharacters": []},
    "subgroup2": {"cocharacters": []}
  })"));
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep["theorem_consistent"] == true);
  CHECK(rep["cross_checked"] == true);
  CHECK(rep["exact"]["rho"] == 1);
  CHECK(rep["exact"]["degrees"][0]["z_rank"] == 1);
  CHECK(rep["exact"]["degrees"][1]["z_rank"] == 1);
  CHECK(rep["tor"]["degrees"][0]["finite_dim"] == 1);
  CHECK(rep["tor"]["degrees"][1]["finite_dim"] == 1);
}

TEST_CASE("ktheory command on the two-sphere") {
  RunResult r = run_command(Command::KTheory, parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 2}]},
    "subgroup1": {"k_basis": []},
    "subgroup2": {"cocharacters": []}
  })"));
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep["ktheory"]["k0"]["q_dim"] == 2);
  CHECK(rep["ktheory"]["k1"]["q_dim"] == 0);
  CHECK(rep["ktheory"]["maximal_rank"] == true);
}

TEST_CASE("enlarge command re-verifies its post-conditions") {
  RunResult r = run_command(Command::Enlarge, parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 3}]},
    "subgroup1": {"cocharacters": []},
    "subgroup2": {"k_basis": [[1, 1]]},
    "options": {"seed": 7}
  })"));
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  const json& post = rep["enlarged"]["postconditions"];
  CHECK(post["contains_original"] == true);
  CHECK(post["is_summand"] == true);
  CHECK(post["intersection_rank_preserved"] == true);
  CHECK(post["maximal_rank_equality"] == true);
  CHECK(rep["enlarged"]["rank"] == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  for (Command cmd : {Command::Check, Command::Tor}) {
    RunResult a = run_command(cmd, parse_spec(kSu3Strict));
    RunResult b = run_command(cmd, parse_spec(kSu3Strict));
    CHECK(a.report_json == b.report_json);
  }
  // the randomized command is determined by the seed
  const char* enlarge_spec = R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 3}]},
    "subgroup1": {"cocharacters": []},
    "subgroup2": {"k_basis": [[1, 1]]},
    "options": {"seed": 3}
  })";
  RunResult a = run_command(Command::Enlarge, parse_spec(enlarge_spec));
  RunResult b = run_command(Command::Enlarge, parse_spec(enlarge_spec));
  CHECK(a.report_json == b.report_json);
}

TEST_CASE("budget exhaustion yields an inconclusive tor report with exit 2") {
  RunResult r = run_command(Command::Tor, parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 3}]},
    "subgroup1": {"k_basis": []},
    "subgroup2": {"k_basis": []},
    "options": {"max_spairs": 2}
  })"));
  CHECK(r.exit_code == 2);
  json rep = json::parse(r.report_json);
  CHECK(rep.contains("inconclusive"));
  CHECK(rep["theorem_consistent"] == true);  // vacuous, never a false verdict
}

TEST_CASE("large integers travel as decimal strings") {
  BiquotientSpec spec = parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "torus", "rank": 1}]},
    "subgroup1": {"k_basis": [["36893488147419103232"]]},
    "subgroup2": {"k_basis": []}
  })");
  CHECK(spec.subgroup1.matrix(0, 0) == Int("36893488147419103232"));  // 2^65
  json echo = json::parse(spec_to_json(spec));
  CHECK(echo["subgroup1"]["k_basis"][0][0] == "36893488147419103232");

  // small entries stay numbers
  json echo2 = json::parse(spec_to_json(parse_spec(kSu3Strict)));
  CHECK(echo2["subgroup2"]["cocharacters"][0][0] == 1);
}

TEST_CASE("field options parse and flow through") {
  BiquotientSpec spec = parse_spec(R"({
    "schema_version": 1,
    "group": {"factors": [{"type": "SU", "n": 2}]},
    "subgroup1": {"k_basis": []},
    "subgroup2": {"cocharacters": []},
    "options": {"field": "fp:5"}
  })");
  CHECK(spec.options.field == FieldTag::prime(5));
  RunResult r = run_command(Command::Tor, spec);
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  REQUIRE(rep.contains("tor_mod_p"));
  CHECK(rep["tor_mod_p"]["degrees"][0]["finite_dim"] == 2);
  CHECK(rep["tor_mod_p"].contains("diagnostic_only"));

  CHECK_THROWS_AS(FieldTag::parse("zz"), std::invalid_argument);
}

TEST_CASE("command names round trip") {
  for (Command c : {Command::Check, Command::Tor, Command::KTheory, Command::Enlarge})
    CHECK(parse_command(to_string(c)) == c);
  CHECK_THROWS_AS(parse_command("frobnicate"), std::invalid_argument);
}
