#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qm/moment.hpp"

namespace qm {

inline constexpr const char* kScenarioSchema = "quasimoment-scenarios/1";
inline constexpr const char* kReportSchema = "quasimoment-report/1";

struct ScenarioParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScenarioConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "pair": (π_B, μ) on one module; "fusion": π_W on V ⊕ V* for sl_n
struct Scenario {
  std::string id;
  std::string module;  // module spec, e.g. "sl(2):adjoint:odd"
  std::string construction = "pair";
  std::string example;  // printed reference set: adjoint, vector, pair2, pair3 or empty
  int truncation = -1;
  std::vector<std::string> checks;
  std::map<std::string, bool> expected;  // known outcome per check
  std::string description;
};

const std::vector<std::string>& known_checks();

// throws ScenarioParseError
std::vector<Scenario> parse_scenarios(const std::string& json_text);
const std::string& bundled_scenario_json();
std::vector<Scenario> bundled_scenarios();
const Scenario& find_bundled(const std::string& id);

struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<CheckResult> identities;  // names starting "diagnostic:" do not count
  double seconds = 0;
  int expected = -1;  // recorded outcome from the scenario file: 1 pass, 0 fail, -1 none
};

struct ScenarioReport {
  std::string id;
  std::string module;
  int truncation = -1;
  bool pass = true;
  std::vector<CheckReport> checks;
  double seconds = 0;
};

// truncation_override < 0 keeps the scenario's own order; throws ScenarioConstructionError
ScenarioReport run_scenario(const Scenario& s, int truncation_override = -1);
// sorted by id; independent scenarios run concurrently
std::vector<ScenarioReport> run_scenarios(const std::vector<Scenario>& list, int truncation_override = -1);

std::string report_json(const std::vector<ScenarioReport>& reports, bool with_runtime = true);
std::string report_text(const std::vector<ScenarioReport>& reports);
// constructed objects in the paper's notation
std::string show_scenario(const Scenario& s);

}  // namespace qm
