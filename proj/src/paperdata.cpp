#include "qm/paperdata.hpp"

#include <map>
#include <sstream>

namespace qm::printed {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      // odd adjoint sl(2)
      {"adjoint.e_V", "ξ0 ∂ξ-2 - 2 ξ2 ∂ξ0"},
      {"adjoint.h_V", "2 ξ2 ∂ξ2 - 2 ξ-2 ∂ξ-2"},
      {"adjoint.f_V", "-ξ0 ∂ξ2 + 2 ξ-2 ∂ξ0"},
      {"adjoint.pi_B", "4 ∂ξ2∂ξ-2 + 4 ∂ξ0∂ξ0"},
      {"adjoint.mu", "h: 1/2 ξ2ξ-2; e: -1/2 ξ0ξ-2; f: -1/2 ξ2ξ0"},
      {"adjoint.pi_r", "2 ξ0ξ-2 ∂ξ0∂ξ-2 - 4 ξ2ξ-2 ∂ξ0∂ξ0 + 2 ξ2ξ0 ∂ξ2∂ξ0"},
      {"adjoint.Phi", "1 + 1/2 ξ2ξ-2 | -1/2 ξ0ξ-2 ; -1/2 ξ2ξ0 | 1 - 1/2 ξ2ξ-2"},
      {"adjoint.L_plus", "1 + 1/4 ξ2ξ-2 | -1/2 ξ0ξ-2 ; 0 | 1 - 1/4 ξ2ξ-2"},
      {"adjoint.L_minus", "1 - 1/4 ξ2ξ-2 | 0 ; 1/2 ξ2ξ0 | 1 + 1/4 ξ2ξ-2"},
      // even ϖ₁ of sl(2)
      {"vector.e_V", "v1 ∂v-1"},
      {"vector.h_V", "v1 ∂v1 - v-1 ∂v-1"},
      {"vector.f_V", "v-1 ∂v1"},
      {"vector.pi_B", "2 ∂v1∂v-1"},
      {"vector.mu_dual", "e: 1/4 v1^2; h: -1/2 v1v-1; f: -1/4 v-1^2"},
      {"vector.mu", "1/4(-v1v-1) | 1/4(-v-1^2) ; 1/4 v1^2 | 1/4 v1v-1"},
      {"vector.Phi", "1 - 1/4 v1v-1 | -1/4 v-1^2 ; 1/4 v1^2 | 1 + 1/4 v1v-1"},
      {"vector.pi_r", "1/2 v1v-1 ∂v1∂v-1"},
      // odd ϖ₁ ⊕ ϖ₁* of sl(2)
      {"pair2.pi_B", "2 ∂v1∂v1* + 2 ∂v2∂v2*"},
      {"pair2.mu", "h: 1/4(v1v1* - v2v2*); e: 1/2 v2v1*; f: 1/2 v1v2*"},
      {"pair2.r_dyn", "-1/8 v1v2v1*v2* ∂v1∂v1* - 1/8 v1v2v1*v2* ∂v2∂v2*"},
      {"pair2.Phi",
       "1 + 1/4 v1v1* - 1/4 v2v2* + 3/16 v1v2v1*v2* | 1/2 v2v1* ; "
       "1/2 v1v2* | 1 - 1/4 v1v1* + 1/4 v2v2* + 3/16 v1v2v1*v2*"},
      {"pair2.t_W", "1/2(v1v2 ∂v1∂v2 - v1v1* ∂v2∂v2* + v2v2* ∂v1∂v1* - v1*v2* ∂v1*∂v2*)"},
      {"pair2.pi_W",
       "v1v1* ∂v2∂v2* + 1/2(-v1v2 ∂v1∂v2 - v1v2* ∂v1∂v2* - v2v1* ∂v2∂v1* + v1*v2* ∂v1*∂v2*)"},
      {"pair2.omega_B", "2 dv1∧dv1* + 2 dv2∧dv2*"},
      // printed with two misprints; the corrected reading follows
      {"pair2.omega_printed",
       "dv1∧dv1* (2 - 1/2 v1v2*) + 1/2 dv1∧dv2* v2v1* + dv2∧dv3 1/2 v1v2* + dv2∧dv2* (2 - 1/2 v1v1*)"},
      {"pair2.omega",
       "dv1∧dv1* (2 - 1/2 v2v2*) + 1/2 dv1∧dv2* v2v1* + 1/2 dv2∧dv1* v1v2* + dv2∧dv2* (2 - 1/2 v1v1*)"},
      {"pair2.alpha", "1/2(dv1 v2v1*v2* - dv2 v1v1*v2*)"},
      // odd ϖ₁ ⊕ ϖ₁* of sl(3)
      {"pair3.mu",
       "H1: 1/3 v1v1* - 1/6 v2v2* - 1/6 v3v3*; H2: 1/6 v1v1* + 1/6 v2v2* - 1/3 v3v3*; "
       "E12: 1/2 v2v1*; E23: -1/2 v3v2*; E13: -1/2 v3v1*; "
       "E21: 1/2 v1v2*; E32: -1/2 v2v3*; E31: 1/2 v1v3*"},
      {"pair3.nu",
       "H1: 1/3 v1v1* - 1/6 v2v2* - 1/6 v3v3* + 1/24 v1v2v1*v2* + 1/24 v1v3v1*v3* - 1/12 v2v3v2*v3*; "
       "H2: 1/6 v1v1* + 1/6 v2v2* - 1/3 v3v3* + 1/12 v1v2v1*v2* - 1/24 v1v3v1*v3* - 1/24 v2v3v2*v3*; "
       "E12: 1/2 v2v1* + 1/8 v2v3v1*v3*; "
       "E23: -(1/2 v3v2* - 1/8 v1v3v1*v2*); "
       "E13: -(1/2 v3v1* + 1/8 v2v3v1*v2*); "
       "E21: 1/2 v1v2* + 1/8 v1v3v2*v3*; "
       "E32: -1/2 v2v3* - 1/8 v1v2v1*v3*; "
       "E31: 1/2 v1v3* - 1/8 v1v2v2*v3*"},
      // reading of pair3.nu that satisfies the group-moment condition
      {"pair3.nu_corrected",
       "H1: 1/3 v1v1* - 1/6 v2v2* - 1/6 v3v3* + 1/24 v1v2v1*v2* + 1/24 v1v3v1*v3* - 1/12 v2v3v2*v3*; "
       "H2: 1/6 v1v1* + 1/6 v2v2* - 1/3 v3v3* + 1/12 v1v2v1*v2* - 1/24 v1v3v1*v3* - 1/24 v2v3v2*v3*; "
       "E12: 1/2 v2v1* + 1/8 v2v3v1*v3*; "
       "E23: 1/2 v3v2* + 1/8 v1v3v1*v2*; "
       "E13: 1/2 v3v1* - 1/8 v2v3v1*v2*; "
       "E21: 1/2 v1v2* + 1/8 v1v3v2*v3*; "
       "E32: 1/2 v2v3* + 1/8 v1v2v1*v3*; "
       "E31: 1/2 v1v3* - 1/8 v1v2v2*v3*"},
  };
  return t;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

SuperPoly sqrt_term(const Setting& st) {
  const auto& t = st.space->table();
  return super_sqrt(parse_poly(t, "1 + 1/4 v1v-1"), st.truncation);
}

}  // namespace

const std::string& text(const std::string& key) {
  auto it = table().find(key);
  if (it == table().end()) throw AlgebraError("no printed expression '" + key + "'");
  return it->second;
}

std::vector<std::string> keys() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

SuperPoly poly(const TablePtr& t, const std::string& key) { return parse_poly(t, text(key)); }

SuperMatrix matrix(const TablePtr& t, const std::string& key, int truncation) {
  auto rows = split(text(key), ';');
  int n = static_cast<int>(rows.size());
  SuperMatrix m(t, n, truncation);
  for (int i = 0; i < n; ++i) {
    auto cells = split(rows[i], '|');
    if (static_cast<int>(cells.size()) != n) throw AlgebraError("printed matrix '" + key + "' is not square");
    for (int j = 0; j < n; ++j) m(i, j) = parse_poly(t, cells[j]);
  }
  return m;
}

std::vector<SuperPoly> element(const Setting& st, const std::string& key) {
  std::vector<SuperPoly> out(st.dim_g(), st.space->zero());
  for (const auto& part : split(text(key), ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw AlgebraError("printed element '" + key + "' is malformed");
    int b = st.g->index(trim(part.substr(0, colon)));
    out[b] += parse_poly(st.space->table(), part.substr(colon + 1));
  }
  return out;
}

std::vector<SuperPoly> adjoint_change_of_variables(const Setting& st, const Q& c) {
  const auto& t = st.space->table();
  std::vector<SuperPoly> subs;
  for (int i = 0; i < st.space->dim(); ++i) subs.push_back(st.space->x(i));
  subs[t->index("ξ0")] += parse_poly(t, "ξ2ξ0ξ-2") * c;
  return subs;
}

SuperMatrix vector_l_plus(const Setting& st) {
  const auto& t = st.space->table();
  auto s = sqrt_term(st);
  auto si = super_inverse(s, st.truncation);
  SuperMatrix m(t, 2, st.truncation);
  m(0, 0) = si;
  m(0, 1) = SuperPoly::multiply(parse_poly(t, "-1/4 v-1^2"), si, st.truncation);
  m(1, 1) = s;
  return m;
}

SuperMatrix vector_l_minus(const Setting& st) {
  const auto& t = st.space->table();
  auto s = sqrt_term(st);
  auto si = super_inverse(s, st.truncation);
  SuperMatrix m(t, 2, st.truncation);
  m(0, 0) = si;
  m(1, 0) = SuperPoly::multiply(parse_poly(t, "-1/4 v1^2"), si, st.truncation);
  m(1, 1) = s;
  return m;
}

SuperMatrix vector_l_minus_corrected(const Setting& st) {
  auto m = vector_l_minus(st);
  std::swap(m(0, 0), m(1, 1));
  return m;
}

SuperMatrix vector_gauss_diagonal(const Setting& st) {
  const auto& t = st.space->table();
  SuperMatrix m(t, 2, st.truncation);
  m(0, 0) = super_inverse(parse_poly(t, "1 + 1/4 v1v-1"), st.truncation);
  m(1, 1) = parse_poly(t, "1/4(1 + 4 v1v-1)");
  return m;
}

}  // namespace qm::printed
