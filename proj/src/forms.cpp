#include "qm/forms.hpp"

namespace qm {

FormSpacePtr make_form_space(const std::vector<std::string>& coords, const std::vector<Parity>& parities) {
  return make_space(coords, parities, "d");
}

FormSpacePtr form_space_like(const PhaseSpace& s) {
  std::vector<std::string> names;
  std::vector<Parity> par;
  for (int i = 0; i < s.dim(); ++i) {
    names.push_back(s.coord_name(i));
    par.push_back(s.coord_odd(i) ? Parity::Odd : Parity::Even);
  }
  return make_form_space(names, par);
}

SuperPoly coords_to(const SuperPoly& f, const TablePtr& target) {
  SuperPoly r(target);
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < kMaxGenerators; ++i)
      if (m.e[i] && (i >= target->size() || target->name(i) != f.table()->name(i)))
        throw AlgebraError("coords_to: generator " + f.table()->name(i) + " has no counterpart");
    Mono n = m;
    r.add_term(n, c);
  }
  return r;
}

SuperPoly exterior_derivative(const FormSpace& s, const SuperPoly& w) {
  SuperPoly r = s.zero();
  for (int i = 0; i < s.dim(); ++i) {
    auto p = w.lder(i);
    if (!p.is_zero()) r += s.theta(i) * p;
  }
  return r;
}

SuperPoly interior_product(const FormSpace& s, const std::vector<SuperPoly>& comps, const SuperPoly& w) {
  SuperPoly r = s.zero();
  for (int i = 0; i < s.dim(); ++i) {
    if (comps[i].is_zero()) continue;
    auto p = w.lder(s.dim() + i);
    if (!p.is_zero()) r += comps[i] * p;
  }
  return r;
}

SuperPoly lie_derivative(const FormSpace& s, const std::vector<SuperPoly>& comps, const SuperPoly& w) {
  SuperPoly r = s.zero();
  for (int i = 0; i < s.dim(); ++i) {
    if (comps[i].is_zero()) continue;
    auto px = w.lder(i);
    if (!px.is_zero()) r += comps[i] * px;
    auto pd = w.lder(s.dim() + i);
    if (pd.is_zero()) continue;
    // L_X(dx_i) = (−1)^{|X|} d(X_i) so that L_X commutes with d in the graded sense
    bool coord_odd = s.coord_odd(i);
    auto even = comps[i].even_part(), odd = comps[i].odd_part();
    auto& same = coord_odd ? odd : even;   // pieces of X that are even
    auto& flip = coord_odd ? even : odd;   // pieces of X that are odd
    r += exterior_derivative(s, same) * pd;
    r -= exterior_derivative(s, flip) * pd;
  }
  return r;
}

int form_degree(const FormSpace& s, const SuperPoly& w) {
  int d = -1;
  for (const auto& [m, c] : w.terms()) {
    int k = m.degree_in(s.momentum_mask());
    if (d == -1) d = k;
    else if (d != k) return -1;
  }
  return d;
}

QMatrix two_form_body(const FormSpace& s, const SuperPoly& w) {
  int n = s.dim();
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = w.lder(n + j).lder(n + i).body();
  return m;
}

FormMatrix maurer_cartan_pullback(const FormSpace& s, const SuperMatrix& phi) {
  int n = phi.size();
  SuperMatrix inv = super_inverse(phi);
  FormMatrix out(n, std::vector<SuperPoly>(n, s.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto a = coords_to(inv(i, k), s.table());
        if (a.is_zero()) continue;
        auto d = exterior_derivative(s, coords_to(phi(k, j), s.table()));
        if (!d.is_zero()) out[i][j] += SuperPoly::multiply(a, d, phi.truncation() < 0 ? -1 : phi.truncation() + 1);
      }
  return out;
}

FormMatrix structure_equation_residual(const FormSpace& s, const FormMatrix& a) {
  int n = static_cast<int>(a.size());
  FormMatrix out(n, std::vector<SuperPoly>(n, s.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out[i][j] = exterior_derivative(s, a[i][j]);
      for (int k = 0; k < n; ++k) out[i][j] += a[i][k] * a[k][j];
    }
  return out;
}

}  // namespace qm
