#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qm/invariants.hpp"
#include "qm/scenario.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kParseError = 2, kConstructionError = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qm::ScenarioParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& config, int truncation, const std::string& json_out, bool timing) {
  auto text = config == "bundled" ? qm::bundled_scenario_json() : read_file(config);
  auto list = qm::parse_scenarios(text);
  auto reports = qm::run_scenarios(list, truncation);
  std::cout << qm::report_text(reports);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw qm::ScenarioParseError("cannot write " + json_out);
    out << qm::report_json(reports, timing);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  std::cout << (ok ? "all checks pass" : "some checks failed") << " (" << reports.size() << " scenarios)\n";
  return ok ? kPass : kCheckFailure;
}

int invariants(const std::string& algebra, const std::string& a, const std::string& b) {
  qm::AlgebraPtr g;
  qm::ExprPtr ea, eb;
  try {
    g = qm::parse_algebra(algebra);
    ea = qm::parse_tensor_expr(g, a);
    eb = qm::parse_tensor_expr(g, b);
  } catch (const std::exception& e) {
    throw qm::ScenarioParseError(e.what());
  }
  try {
    auto d = qm::hom_dimension(*g, ea, eb);
    std::cout << "dim Hom_" << g->label << "(" << a << ", " << b << ") = " << d << "\n";
  } catch (const std::exception& e) {
    throw qm::ScenarioConstructionError(e.what());
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic quasi-Poisson moment maps: scenario runner and invariant tables"};
  app.require_subcommand(1);

  std::string config, json_out;
  int truncation = -1;
  auto* run_cmd = app.add_subcommand("run", "run a scenario file (\"bundled\" for the built-in suite)");
  run_cmd->add_option("config", config, "scenario JSON file")->required();
  run_cmd->add_option("--truncation", truncation, "series order N for even modules");
  run_cmd->add_option("--json", json_out, "write the versioned JSON report here");
  bool no_timing = false;
  run_cmd->add_flag("--no-timing", no_timing, "omit runtimes from the JSON report (byte-stable output)");

  std::string algebra, expr_a, expr_b;
  auto* inv_cmd = app.add_subcommand("invariants", "dim Hom_g(A, B) for tensor expressions");
  inv_cmd->add_option("algebra", algebra, "e.g. so(8)")->required();
  inv_cmd->add_option("A", expr_a, "e.g. wedge3(v1)")->required();
  inv_cmd->add_option("B", expr_b, "e.g. sym3(v1)")->required();

  std::string id;
  auto* show_cmd = app.add_subcommand("show", "print the objects of a bundled scenario");
  show_cmd->add_option("scenario", id, "scenario id, e.g. paper-sl2-adjoint")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kParseError;
  }

  try {
    if (*run_cmd) return run(config, truncation, json_out, !no_timing);
    if (*inv_cmd) return invariants(algebra, expr_a, expr_b);
    if (*show_cmd) {
      std::cout << qm::show_scenario(qm::find_bundled(id));
      return kPass;
    }
  } catch (const qm::ScenarioParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const qm::ScenarioConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return kConstructionError;
  } catch (const std::exception& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return kConstructionError;
  }
  return kPass;
}
