#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qm/scenario.hpp"

using namespace qm;

namespace {

std::string doc(const std::string& scenarios) {
  return std::string(R"({"schema": "quasimoment-scenarios/1", "scenarios": [)") + scenarios + "]}";
}

const std::vector<ScenarioReport>& bundled_reports() {
  static const auto r = run_scenarios(bundled_scenarios());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("scenario files are validated") {
  CHECK(parse_scenarios(doc("")).empty());
  CHECK_THROWS_AS(parse_scenarios("{"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios("[]"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(R"({"schema": "other/1", "scenarios": []})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(R"({"schema": "quasimoment-scenarios/1"})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc("1")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"module": "sl(2):adjoint:odd"})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x"})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m"}, {"id": "x", "module": "m"})")),
                  ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m", "checks": ["nope"]})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m", "example": "nope"})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m", "construction": "nope"})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m", "truncation": "six"})")), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenarios(doc(R"({"id": "x", "module": "m", "expect": {"hamiltonian": true}})")),
                  ScenarioParseError);
  auto ok = parse_scenarios(doc(R"({"id": "x", "module": "sl(2):v1:even", "truncation": 4,
                                    "checks": ["hamiltonian"], "expect": {"hamiltonian": true}})"));
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].truncation == 4);
  CHECK(ok[0].expected.at("hamiltonian"));
}

TEST_CASE("construction failures and misplaced checks") {
  auto bad = parse_scenarios(doc(R"({"id": "x", "module": "sl(2):vector9:odd", "checks": ["hamiltonian"]})"));
  CHECK_THROWS_AS(run_scenario(bad[0]), ScenarioConstructionError);
  auto fusion_only = parse_scenarios(doc(R"({"id": "x", "module": "so(5):v1:odd", "checks": ["forms-identities"]})"));
  CHECK_THROWS_AS(run_scenario(fusion_only[0]), ScenarioParseError);
  auto pair_only = parse_scenarios(
      doc(R"({"id": "x", "module": "sl(2):v1+v1dual:odd", "construction": "fusion", "checks": ["invariants-table"]})"));
  CHECK_THROWS_AS(run_scenario(pair_only[0]), ScenarioParseError);
}

TEST_CASE("truncation applies to even modules only") {
  auto list = parse_scenarios(doc(R"({"id": "e", "module": "sp(4):v1:even", "checks": ["hamiltonian"]},
                                     {"id": "o", "module": "so(5):v1:odd", "checks": ["hamiltonian"]})"));
  auto r = run_scenarios(list, 4);
  REQUIRE(r.size() == 2);
  CHECK(r[0].id == "e");
  CHECK(r[0].truncation == 4);
  CHECK(r[1].truncation == -1);
  CHECK(r[0].pass);
  CHECK(r[1].pass);
}

TEST_CASE("bundled suite has the required scenarios") {
  auto all = bundled_scenarios();
  std::vector<std::string> ids;
  for (const auto& s : all) ids.push_back(s.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const char* id : {"paper-sl2-adjoint", "paper-thm-fusion-sl3", "paper-sl2-vector", "paper-example-sl2-fusion"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  for (const auto& p : listed_pairs()) {
    bool found = false;
    for (const auto& s : all) found = found || (s.module == p && s.id.rfind("list-", 0) == 0);
    CAPTURE(p);
    CHECK(found);
  }
  CHECK(find_bundled("paper-sl2-adjoint").example == "adjoint");
  CHECK_THROWS_AS(find_bundled("nope"), ScenarioParseError);
}

TEST_CASE("bundled outcomes match the recorded expectations") {
  for (const auto& r : bundled_reports())
    for (const auto& c : r.checks) {
      CAPTURE(r.id);
      CAPTURE(c.name);
      REQUIRE(c.expected >= 0);
      CHECK(c.pass == (c.expected == 1));
    }
}

TEST_CASE("report is deterministic and matches the golden file") {
  auto a = report_json(bundled_reports(), false);
  auto b = report_json(run_scenarios(bundled_scenarios()), false);
  CHECK(a == b);
  CHECK(a == slurp(QM_TEST_DATA "/golden/report.json"));
  CHECK(report_json({}, false).find("\"schema\": \"quasimoment-report/1\"") != std::string::npos);
}

TEST_CASE("show renders the constructed objects") {
  auto text = show_scenario(find_bundled("paper-sl2-adjoint"));
  CHECK(text.find("paper-sl2-adjoint") != std::string::npos);
  CHECK(text.size() > 100);
}
