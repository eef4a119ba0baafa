#include "qm/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qm/factorize.hpp"
#include "qm/forms.hpp"
#include "qm/fusion.hpp"
#include "qm/invariants.hpp"
#include "qm/paperdata.hpp"

namespace qm {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr int kDefaultEvenTruncation = 8;

bool is_diagnostic(const CheckResult& r) { return r.name.rfind("diagnostic:", 0) == 0; }

CheckResult renamed(CheckResult r, const std::string& name) {
  r.name = name;
  return r;
}

CheckResult holds(const std::string& name, bool ok, const std::string& note = "") {
  CheckResult r{name, ok, {}, note, 0};
  return r;
}

CheckResult vanishes(const std::string& name, const MultiVector& m) {
  return compare(name, m.poly(), SuperPoly(m.space()->table()));
}

// everything a scenario may need, built once
struct Built {
  Setting st;
  MultiVector pi_b;
  MomentMap mu;
  MultiVector pi_r;
  std::optional<Fusion> fusion;
};

Built build(const Scenario& s, int truncation) {
  try {
    if (s.construction == "fusion") {
      auto spec = parse_module_spec(s.module);
      if (spec.g->family != Family::SL) throw AlgebraError("fusion needs sl(n)");
      auto f = fusion_bivector(spec.g->n, spec.rep->parity);
      Built b{f.st, f.pi_b, moment_map(f.st), f.twist, std::move(f)};
      return b;
    }
    auto spec = parse_module_spec(s.module);
    auto st = make_setting(spec.rep, truncation);
    Built b{st, bilinear_bivector(*spec.rep, st.space), moment_map(st),
            rmatrix_bivector(st, standard_r_matrix(*st.g).t), std::nullopt};
    return b;
  } catch (const std::exception& e) {
    throw ScenarioConstructionError(s.id + ": " + e.what());
  }
}

SuperPoly printed_poly(const Built& b, const std::string& key) { return printed::poly(b.st.space->table(), key); }

std::vector<CheckResult> printed_lifts(const Built& b, const std::string& ex) {
  std::vector<CheckResult> out;
  for (const char* x : {"e", "h", "f"}) {
    int a = b.st.g->index(x);
    out.push_back(compare(std::string(x) + "_V = printed", b.st.lifts[a].poly(),
                          printed_poly(b, ex + "." + x + "_V")));
  }
  return out;
}

std::vector<CheckResult> hamiltonian_checks(const Built& b, const Scenario& s) {
  std::vector<CheckResult> out;
  out.push_back(check_hamiltonian(b.st, b.pi_b, b.mu));
  out.push_back(check_moment_equivariance(b.st, b.mu));
  const auto& ex = s.example;
  auto elem = moment_element(b.st, b.mu);
  auto compare_element = [&](const std::string& name, const std::string& key) {
    auto want = printed::element(b.st, key);
    CheckResult r{name, true, {}, "", 0};
    for (int a = 0; a < b.st.dim_g(); ++a) {
      auto d = elem[a] - want[a];
      if (!d.is_zero()) {
        r.pass = false;
        r.residuals.push_back(b.st.g->basis_labels[a] + ": " + d.str());
      }
    }
    if (!r.pass) r.note = "computed " + moment_str(b.st, elem);
    return r;
  };
  if (ex == "adjoint" || ex == "vector") {
    auto lifts = printed_lifts(b, ex);
    out.insert(out.end(), lifts.begin(), lifts.end());
  }
  if (ex == "adjoint") {
    out.push_back(compare("pi_B = printed", b.pi_b.poly(), printed_poly(b, "adjoint.pi_B")));
    out.push_back(compare_element("mu = printed", "adjoint.mu"));
  } else if (ex == "vector") {
    out.push_back(compare("pi_B = printed", b.pi_b.poly(), printed_poly(b, "vector.pi_B")));
    CheckResult pairing{"<mu, x> = printed", true, {}, "", 0};
    auto want = printed::element(b.st, "vector.mu_dual");
    for (int a = 0; a < b.st.dim_g(); ++a) {
      auto d = b.mu.components[a] - want[a];
      if (!d.is_zero()) {
        pairing.pass = false;
        pairing.residuals.push_back(b.st.g->basis_labels[a] + ": " + d.str());
      }
    }
    out.push_back(pairing);
    out.push_back(compare("mu = printed (End W)", moment_matrix(b.st, b.mu),
                          printed::matrix(b.st.space->table(), "vector.mu", b.st.truncation)));
  } else if (ex == "pair2") {
    out.push_back(compare("pi_B = printed", b.pi_b.poly(), printed_poly(b, "pair2.pi_B")));
    out.push_back(compare_element("mu = printed", "pair2.mu"));
  } else if (ex == "pair3") {
    out.push_back(compare_element("mu = printed", "pair3.mu"));
  }
  return out;
}

std::vector<CheckResult> quasi_poisson_checks(const Built& b) {
  std::vector<CheckResult> out;
  if (b.fusion) {
    auto rd = dynamical_correction(b.st, b.mu);
    out.push_back(renamed(check_quasi_poisson(b.st, b.pi_b + rd), "[[pi_B + r_dyn, pi_B + r_dyn]] = phi_W"));
    out.push_back(holds("phi_W ≠ 0", !phi_v(b.st).is_zero()));
    auto pw = b.pi_b + b.fusion->pi_w + b.fusion->twist;
    out.push_back(renamed(check_quasi_poisson(b.st, pw), "[[pi_B + pi_W + t_W, ...]] = phi_W"));
  } else {
    out.push_back(vanishes("phi_V = 0", phi_v(b.st)));
    out.push_back(renamed(check_quasi_poisson(b.st, b.pi_b), "[[pi_B, pi_B]] = phi_V"));
    out.push_back(vanishes("[[pi_B, pi_B]] = 0", schouten(b.pi_b, b.pi_b)));
  }
  return out;
}

std::vector<CheckResult> rdyn_checks(const Built& b) {
  std::vector<CheckResult> out;
  int k = ad_mu_nilpotency(b.st, b.mu);
  int want = predicted_nilpotency(*b.st.rep);
  out.push_back(holds("ad_mu^k = 0 with the stated k", k == want,
                      "computed " + std::to_string(k) + ", stated " + std::to_string(want)));
  out.push_back(vanishes("r_dyn(mu) = 0", dynamical_correction(b.st, b.mu)));
  return out;
}

std::vector<CheckResult> exp_checks(const Built& b, const Scenario& s) {
  std::vector<CheckResult> out;
  auto m = moment_matrix(b.st, b.mu);
  auto e = exp_moment(b.st, m);
  int want = predicted_exp_degree(*b.st.rep);
  out.push_back(holds("exp∘mu degree = stated", e.degree == want,
                      "computed " + std::to_string(e.degree) + ", stated " + std::to_string(want)));
  if (s.example == "vector") {
    out.push_back(holds("mu^2 = 0", (m * m).is_zero()));
    auto id = SuperMatrix::identity(b.st.space->table(), m.size(), b.st.truncation);
    out.push_back(compare("Phi = E + mu", e.phi, id + m));
    out.push_back(compare("Phi = printed", e.phi, printed::matrix(b.st.space->table(), "vector.Phi", b.st.truncation)));
  }
  return out;
}

std::vector<CheckResult> group_checks(const Built& b, const Scenario& s) {
  std::vector<CheckResult> out;
  const auto& st = b.st;
  auto rd = dynamical_correction(st, b.mu);
  auto e = exp_moment(st, moment_matrix(st, b.mu));
  out.push_back(renamed(check_group_moment(st, b.pi_b + rd, e.phi, st.truncation), "(pi_B + r_dyn, exp∘mu)"));
  out.push_back(check_phi_equivariance(st, e.phi));
  const auto& tab = st.space->table();
  if (s.example == "adjoint") out.push_back(compare("Phi = printed", e.phi, printed::matrix(tab, "adjoint.Phi")));
  if (s.example == "vector")
    out.push_back(compare("Phi = printed", e.phi, printed::matrix(tab, "vector.Phi", st.truncation)));
  if (b.fusion) {
    auto pw = b.pi_b + b.fusion->pi_w + b.fusion->twist;
    if (s.example == "pair2") {
      out.push_back(compare("r_dyn = printed", rd.poly(), printed_poly(b, "pair2.r_dyn")));
      out.push_back(compare("Phi = printed", e.phi, printed::matrix(tab, "pair2.Phi")));
      out.push_back(renamed(check_group_moment(st, pw, e.phi), "(pi_B + pi_W + t_W, exp∘mu)"));
    }
    if (s.example == "pair3") {
      auto nu = printed::element(st, "pair3.nu");
      auto elem = moment_element(st, b.mu);
      CheckResult quad{"quadratic part of nu = mu", true, {}, "", 0};
      CheckResult quad_printed{"diagnostic: quadratic part of nu = printed mu", true, {}, "", 0};
      auto pm = printed::element(st, "pair3.mu");
      for (int a = 0; a < st.dim_g(); ++a) {
        auto q = nu[a].degree_part(2);
        if (!(q - elem[a]).is_zero()) {
          quad.pass = false;
          quad.residuals.push_back(st.g->basis_labels[a] + ": " + (q - elem[a]).str());
        }
        if (!(q - pm[a]).is_zero()) {
          quad_printed.pass = false;
          quad_printed.residuals.push_back(st.g->basis_labels[a] + ": " + (q - pm[a]).str());
        }
      }
      out.push_back(quad);
      out.push_back(quad_printed);
      auto en = exp_moment(st, moment_matrix(st, moment_from_element(st, nu)));
      out.push_back(renamed(check_group_moment(st, pw, en.phi), "(pi_B + pi_W + t_W, exp∘nu)"));
      auto nc = printed::element(st, "pair3.nu_corrected");
      auto ec = exp_moment(st, moment_matrix(st, moment_from_element(st, nc)));
      out.push_back(renamed(check_group_moment(st, pw, ec.phi), "diagnostic: (pi_B + pi_W + t_W, exp∘nu corrected)"));
      auto wrong = check_group_moment(st, pw, e.phi);
      out.push_back(holds("exp∘mu is not a moment map for pi_B + pi_W + t_W", !wrong.pass));
    }
  }
  return out;
}

std::vector<CheckResult> lu_checks(const Built& b, const Scenario& s) {
  std::vector<CheckResult> out;
  const auto& st = b.st;
  auto e = exp_moment(st, moment_matrix(st, b.mu));
  auto l = gauss_factorize(e.phi);
  out.push_back(holds("L in G*", valid_gstar(l)));
  out.push_back(check_lu_moment(st, b.pi_b - b.pi_r, l, kLuKappa, st.truncation));
  out.push_back(vanishes("[[pi_B, pi_r]] = 0", schouten(b.pi_b, b.pi_r)));
  out.push_back(vanishes("[[pi_r, pi_r]] = 0", schouten(b.pi_r, b.pi_r)));
  auto d = b.pi_b - b.pi_r;
  out.push_back(vanishes("[[pi_B - pi_r, pi_B - pi_r]] = 0", schouten(d, d)));
  const auto& tab = st.space->table();
  if (s.example == "adjoint") {
    out.push_back(compare("pi_r = printed", b.pi_r.poly(), printed_poly(b, "adjoint.pi_r")));
    out.push_back(compare("L+ = printed", l.plus, printed::matrix(tab, "adjoint.L_plus")));
    out.push_back(compare("L- = printed", l.minus, printed::matrix(tab, "adjoint.L_minus")));
  } else if (s.example == "vector") {
    int n = st.truncation;
    out.push_back(compare("pi_r = printed", b.pi_r.poly(), printed_poly(b, "vector.pi_r")));
    auto lp = printed::vector_l_plus(st), lm = printed::vector_l_minus(st);
    auto lc = printed::vector_l_minus_corrected(st);
    out.push_back(compare("L+ = printed", l.plus, lp));
    out.push_back(compare("L- = printed", l.minus, lm));
    out.push_back(compare("L+ L-^-1 = Phi (printed L±)", (lp * super_inverse(lm)).truncated(n), e.phi.truncated(n)));
    out.push_back(compare("diagnostic: L- = corrected reading", l.minus, lc));
    out.push_back(compare("diagnostic: L+ L-^-1 = Phi (corrected L-)", (lp * super_inverse(lc)).truncated(n),
                          e.phi.truncated(n)));
    auto g = gauss_udl(e.phi);
    out.push_back(compare("Gauss diagonal = printed", g.diagonal, printed::vector_gauss_diagonal(st)));
  }
  out.push_back(compare("L+ L-^-1 = Phi", l.plus * super_inverse(l.minus), e.phi));
  return out;
}

std::vector<CheckResult> change_checks(const Built& b, const Scenario& s) {
  if (s.example != "adjoint") throw ScenarioParseError(s.id + ": change-of-variables needs example \"adjoint\"");
  std::vector<CheckResult> out;
  auto target = b.pi_b - b.pi_r;
  out.push_back(renamed(check_change_of_variables(b.pi_b, target, printed::adjoint_change_of_variables(b.st)),
                        "xi0 -> xi0 + xi2 xi0 xi-2 carries pi_B to pi_B - pi_r"));
  out.push_back(renamed(
      check_change_of_variables(b.pi_b, target, printed::adjoint_change_of_variables(b.st, Q(1, 2))),
      "diagnostic: xi0 -> xi0 + 1/2 xi2 xi0 xi-2 carries pi_B to pi_B - pi_r"));
  out.push_back(renamed(
      check_change_of_variables(b.pi_b, b.pi_b - b.pi_r * Q(2), printed::adjoint_change_of_variables(b.st)),
      "diagnostic: xi0 -> xi0 + xi2 xi0 xi-2 carries pi_B to pi_B - 2 pi_r"));
  return out;
}

std::vector<CheckResult> fusion_checks(const Built& b) {
  const auto& f = *b.fusion;
  std::vector<CheckResult> out = fusion_identities(f);
  auto lem = fusion_lemmas(f);
  out.insert(out.end(), lem.begin(), lem.end());
  Q want = f.s ? Q(f.n - 1) / Q(2 * f.n) : Q(-(f.n + 1)) / Q(2 * f.n);
  out.push_back(holds(f.s ? "c = (dim V - 1)/(2 dim V)" : "c = -(dim V + 1)/(2 dim V)", f.c == want,
                      "c = " + f.c.get_str()));
  if (f.n == 2 && f.s == 1) {
    out.push_back(compare("t_W = printed", f.twist.poly(), printed_poly(b, "pair2.t_W")));
    out.push_back(compare("pi_W = printed", f.pi_w.poly(), printed_poly(b, "pair2.pi_W")));
  }
  return out;
}

std::vector<CheckResult> forms_checks(const Built& b, const Scenario& s) {
  if (s.example != "pair2") throw ScenarioParseError(s.id + ": forms-identities needs example \"pair2\"");
  std::vector<CheckResult> out;
  const auto& st = b.st;
  auto fs = form_space_like(*st.space);
  auto t = fs->table();
  auto wb = printed::poly(t, "pair2.omega_B"), w = printed::poly(t, "pair2.omega");
  auto al = printed::poly(t, "pair2.alpha");
  out.push_back(compare("d omega_B = 0", exterior_derivative(*fs, wb), SuperPoly(t)));
  out.push_back(compare("d omega = 0", exterior_derivative(*fs, w), SuperPoly(t)));
  out.push_back(compare("omega - omega_B = d alpha", w - wb, exterior_derivative(*fs, al)));
  try {
    auto wp = printed::poly(t, "pair2.omega_printed");
    out.push_back(compare("diagnostic: printed omega - omega_B = d alpha", wp - wb, exterior_derivative(*fs, al)));
  } catch (const AlgebraError& e) {
    out.push_back(holds("diagnostic: printed omega is a form on this space", false, e.what()));
  }
  CheckResult ib{"iota_{x_W} omega_B = d<mu,x>", true, {}, "", 0};
  CheckResult iw{"iota_{x_W} omega = d<mu,x>", true, {}, "", 0};
  CheckResult idiff{"iota_{x_W}(omega - omega_B) = 0", true, {}, "", 0};
  for (int a = 0; a < st.dim_g(); ++a) {
    auto comps = st.lifts[a].components();
    for (auto& c : comps) c = coords_to(c, t);
    auto i1 = interior_product(*fs, comps, wb), i2 = interior_product(*fs, comps, w);
    auto dm = exterior_derivative(*fs, coords_to(b.mu.components[a], t));
    const auto& lab = st.g->basis_labels[a];
    for (auto [r, d] : {std::pair{&ib, i1 - dm}, std::pair{&iw, i2 - dm}, std::pair{&idiff, i2 - i1}})
      if (!d.is_zero()) {
        r->pass = false;
        r->residuals.push_back(lab + ": " + d.str());
      }
  }
  out.push_back(ib);
  out.push_back(iw);
  out.push_back(idiff);
  return out;
}

std::vector<CheckResult> invariants_checks(const Built& b, const Scenario& s) {
  if (b.fusion) throw ScenarioParseError(s.id + ": invariants-table needs a classified pair");
  std::vector<CheckResult> out;
  for (const auto& row : branching_rows(s.module)) {
    std::string name = row.label + " = " + std::to_string(row.dim);
    std::string note = row.claim.empty() ? "no claim" : "claimed " + row.claim;
    out.push_back(holds(name, claim_holds(row), note));
  }
  return out;
}

std::vector<CheckResult> run_check(const Built& b, const Scenario& s, const std::string& c) {
  bool fusion_only = c == "fusion-identities" || c == "forms-identities";
  bool pair_only = c == "rdyn-zero" || c == "exp-degree" || c == "invariants-table" || c == "change-of-variables";
  if (fusion_only && !b.fusion) throw ScenarioParseError(s.id + ": " + c + " needs construction \"fusion\"");
  if (pair_only && b.fusion) throw ScenarioParseError(s.id + ": " + c + " needs construction \"pair\"");
  if (c == "hamiltonian") return hamiltonian_checks(b, s);
  if (c == "quasi-poisson") return quasi_poisson_checks(b);
  if (c == "rdyn-zero") return rdyn_checks(b);
  if (c == "exp-degree") return exp_checks(b, s);
  if (c == "group-moment") return group_checks(b, s);
  if (c == "lu-moment") return lu_checks(b, s);
  if (c == "change-of-variables") return change_checks(b, s);
  if (c == "fusion-identities") return fusion_checks(b);
  if (c == "forms-identities") return forms_checks(b, s);
  if (c == "invariants-table") return invariants_checks(b, s);
  throw ScenarioParseError(s.id + ": unknown check " + c);
}

template <class T>
T field(const ordered_json& j, const char* key, const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const std::exception& e) {
    throw ScenarioParseError(where + ": field '" + key + "' has the wrong type");
  }
}

std::string fixed(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s;
  return o.str();
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> c = {
      "hamiltonian", "quasi-poisson",       "rdyn-zero",         "exp-degree",       "group-moment",
      "lu-moment",   "change-of-variables", "fusion-identities", "forms-identities", "invariants-table"};
  return c;
}

std::vector<Scenario> parse_scenarios(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ScenarioParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioParseError("top level must be an object");
  auto schema = field<std::string>(doc, "schema", "document", "");
  if (schema != kScenarioSchema)
    throw ScenarioParseError("schema must be \"" + std::string(kScenarioSchema) + "\", got \"" + schema + "\"");
  if (!doc.contains("scenarios") || !doc["scenarios"].is_array()) throw ScenarioParseError("missing scenarios array");
  std::vector<Scenario> out;
  std::set<std::string> ids;
  const auto& known = known_checks();
  for (const auto& j : doc["scenarios"]) {
    if (!j.is_object()) throw ScenarioParseError("scenario entries must be objects");
    Scenario s;
    s.id = field<std::string>(j, "id", "scenario", "");
    if (s.id.empty()) throw ScenarioParseError("scenario without id");
    if (!ids.insert(s.id).second) throw ScenarioParseError("duplicate scenario id " + s.id);
    s.module = field<std::string>(j, "module", s.id, "");
    if (s.module.empty()) throw ScenarioParseError(s.id + ": missing module");
    s.construction = field<std::string>(j, "construction", s.id, "pair");
    if (s.construction != "pair" && s.construction != "fusion")
      throw ScenarioParseError(s.id + ": construction must be pair or fusion");
    s.example = field<std::string>(j, "example", s.id, "");
    if (!s.example.empty() && s.example != "adjoint" && s.example != "vector" && s.example != "pair2" &&
        s.example != "pair3")
      throw ScenarioParseError(s.id + ": unknown example " + s.example);
    s.truncation = field<int>(j, "truncation", s.id, -1);
    s.description = field<std::string>(j, "description", s.id, "");
    s.checks = field<std::vector<std::string>>(j, "checks", s.id, {});
    for (const auto& c : s.checks)
      if (std::find(known.begin(), known.end(), c) == known.end())
        throw ScenarioParseError(s.id + ": unknown check " + c);
    s.expected = field<std::map<std::string, bool>>(j, "expect", s.id, {});
    for (const auto& [c, v] : s.expected)
      if (std::find(s.checks.begin(), s.checks.end(), c) == s.checks.end())
        throw ScenarioParseError(s.id + ": expectation for a check that is not run: " + c);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> bundled_scenarios() { return parse_scenarios(bundled_scenario_json()); }

const Scenario& find_bundled(const std::string& id) {
  static const std::vector<Scenario> all = bundled_scenarios();
  for (const auto& s : all)
    if (s.id == id) return s;
  throw ScenarioParseError("no bundled scenario " + id);
}

ScenarioReport run_scenario(const Scenario& s, int truncation_override) {
  auto t0 = Clock::now();
  int trunc = truncation_override >= 0 ? truncation_override : s.truncation;
  bool even_pair = false;
  try {
    even_pair = s.construction == "pair" && parse_module_spec(s.module).rep->parity == Parity::Even;
  } catch (const std::exception& e) {
    throw ScenarioConstructionError(s.id + ": " + e.what());
  }
  if (even_pair && trunc < 0) trunc = kDefaultEvenTruncation;
  if (!even_pair) trunc = -1;
  auto built = build(s, trunc);
  ScenarioReport rep{s.id, s.module, trunc, true, {}, 0};
  for (const auto& c : s.checks) {
    auto c0 = Clock::now();
    CheckReport cr{c, true, {}, 0, -1};
    if (auto it = s.expected.find(c); it != s.expected.end()) cr.expected = it->second ? 1 : 0;
    try {
      cr.identities = run_check(built, s, c);
    } catch (const ScenarioParseError&) {
      throw;
    } catch (const std::exception& e) {
      cr.identities.push_back(holds("evaluation", false, e.what()));
    }
    for (const auto& r : cr.identities)
      if (!is_diagnostic(r) && !r.pass) cr.pass = false;
    cr.seconds = since(c0);
    rep.pass = rep.pass && cr.pass;
    rep.checks.push_back(std::move(cr));
  }
  rep.seconds = since(t0);
  return rep;
}

std::vector<ScenarioReport> run_scenarios(const std::vector<Scenario>& list, int truncation_override) {
  std::vector<ScenarioReport> out(list.size());
  std::vector<std::exception_ptr> errors(list.size());
  const int n = static_cast<int>(list.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = run_scenario(list[i], truncation_override);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string report_json(const std::vector<ScenarioReport>& reports, bool with_runtime) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json js;
    js["id"] = r.id;
    js["module"] = r.module;
    js["truncation"] = r.truncation;
    js["pass"] = r.pass;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json jc;
      jc["check"] = c.name;
      jc["pass"] = c.pass;
      ordered_json ids = ordered_json::array();
      for (const auto& i : c.identities) {
        ordered_json ji;
        ji["identity"] = i.name;
        ji["residual_zero"] = i.pass;
        ji["diagnostic"] = is_diagnostic(i);
        if (!i.note.empty()) ji["note"] = i.note;
        ordered_json res = ordered_json::array();
        for (const auto& x : i.residuals) res.push_back(x);
        ji["residuals"] = res;
        ids.push_back(ji);
      }
      if (c.expected >= 0) jc["expected"] = c.expected == 1;
      jc["identities"] = ids;
      if (with_runtime) jc["runtime_s"] = fixed(c.seconds);
      checks.push_back(jc);
    }
    js["checks"] = checks;
    if (with_runtime) js["runtime_s"] = fixed(r.seconds);
    all = all && r.pass;
    arr.push_back(js);
  }
  doc["pass"] = all;
  doc["scenarios"] = arr;
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<ScenarioReport>& reports) {
  std::ostringstream o;
  for (const auto& r : reports) {
    o << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.module;
    if (r.truncation >= 0) o << ", N = " << r.truncation;
    o << "]  " << fixed(r.seconds) << " s\n";
    for (const auto& c : r.checks) {
      o << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
      if (c.expected >= 0 && (c.expected == 1) != c.pass) o << "  (differs from the recorded outcome)";
      else if (c.expected == 0) o << "  (known)";
      o << "\n";
      for (const auto& i : c.identities) {
        o << "      " << (i.pass ? "ok   " : is_diagnostic(i) ? "note " : "RED  ") << i.name;
        if (!i.note.empty()) o << "  (" << i.note.substr(0, 160) << ")";
        o << "\n";
        if (!i.pass && !i.residuals.empty()) o << "           " << i.residuals.front().substr(0, 160) << "\n";
      }
    }
  }
  return o.str();
}

std::string show_scenario(const Scenario& s) {
  int trunc = s.truncation;
  auto b = build(s, trunc < 0 ? kDefaultEvenTruncation : trunc);
  const auto& st = b.st;
  std::ostringstream o;
  o << s.id << ": " << s.module << " (" << s.construction << ")\n";
  if (!s.description.empty()) o << s.description << "\n";
  o << "coordinates:";
  for (int i = 0; i < st.space->dim(); ++i) o << " " << st.space->coord_name(i);
  o << "\n";
  for (int a = 0; a < st.dim_g(); ++a) o << "(" << st.g->basis_labels[a] << ")_V = " << st.lifts[a].str() << "\n";
  o << "pi_B = " << b.pi_b.str() << "\n";
  o << "mu = " << moment_str(st, moment_element(st, b.mu)) << "\n";
  auto m = moment_matrix(st, b.mu);
  o << "mu on W = " << m.str() << "\n";
  o << "ad_mu nilpotent of index " << ad_mu_nilpotency(st, b.mu) << "\n";
  o << "r_dyn(mu) = " << dynamical_correction(st, b.mu).str() << "\n";
  auto e = exp_moment(st, m);
  o << "Phi = exp∘mu = " << e.phi.str() << "  (degree " << e.degree << ")\n";
  o << "pi_r = " << b.pi_r.str() << "\n";
  if (b.fusion) {
    o << "c = " << b.fusion->c.get_str() << "\n";
    o << "psi_W = " << b.fusion->psi.str() << "\n";
    o << "pi_W = " << b.fusion->pi_w.str() << "\n";
  } else {
    try {
      auto l = gauss_factorize(e.phi);
      o << "L+ = " << l.plus.str() << "\nL- = " << l.minus.str() << "\n";
    } catch (const std::exception& ex) {
      o << "L±: " << ex.what() << "\n";
    }
  }
  if (st.truncation >= 0) o << "series truncated at order " << st.truncation << "\n";
  return o.str();
}

}  // namespace qm
