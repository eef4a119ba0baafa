#pragma once

#include <string>
#include <vector>

#include "qm/factorize.hpp"
#include "qm/liealg.hpp"
#include "qm/supermatrix.hpp"

namespace qm {

// Everything derived from one (g, V) pair: the supermanifold, the generating
// fields (u_a)_V and the defining representation W used for group elements.
struct Setting {
  AlgebraPtr g;
  ModulePtr rep;
  SpacePtr space;
  std::vector<MultiVector> lifts;  // (u_a)_V
  std::vector<QMatrix> w_dual;     // ρ_W(u^a)
  int truncation = -1;             // global order for even modules, -1 when exact

  int dim_g() const { return g->dim(); }
  int n_w() const { return g->n; }
  bool even() const { return rep->parity == Parity::Even; }
  // (u^a)_V
  MultiVector dual_lift(int a) const;
  // Y ∈ F ⊗ End(W) projected to g and lifted: Σ_a tr(Y ρ_W(u^a)) (u_a)_V
  MultiVector lift_matrix(const SuperMatrix& y) const;
};

Setting make_setting(const ModulePtr& rep, int truncation = -1);

struct MomentMap {
  SpacePtr space;
  std::vector<SuperPoly> components;  // ⟨μ, u_a⟩
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> residuals;  // nonzero residuals only
  std::string note;
  double seconds = 0;
};

// π_B with {v, w} = 2 B(v, w) on linear coordinates
MultiVector bilinear_bivector(const ModuleRep& rep, const SpacePtr& s);
// ⟨μ, x⟩ = ¼ Σ_j (x.v_j) v_j*
MomentMap moment_map(const Setting& st);
MomentMap scaled(const MomentMap& mu, const Q& c);
// coefficients of μ as an element of F ⊗ g: μ = Σ_b c_b u_b
std::vector<SuperPoly> moment_element(const Setting& st, const MomentMap& mu);
std::string moment_str(const Setting& st, const std::vector<SuperPoly>& element);
// the same element acting on W
SuperMatrix moment_matrix(const Setting& st, const MomentMap& mu);
MomentMap moment_from_element(const Setting& st, const std::vector<SuperPoly>& element);

// matrix of ad_μ on g with entries in F: ad_μ(u_b) = Σ_c A(c,b) u_c
SuperMatrix ad_mu(const Setting& st, const MomentMap& mu);
// smallest k with ad_μ^k = 0; throws if none up to the bound
int ad_mu_nilpotency(const Setting& st, const MomentMap& mu);
// r_dyn(μ) = ½ Σ_a (u^a)_V ∧ (T u_a)_V with T = φ(ad_μ), φ(s) = 1/s − ½ coth(s/2)
MultiVector dynamical_correction(const Setting& st, const MomentMap& mu);
// coefficient of s^k in φ(s)
Q phi_coefficient(int k);

struct ExpResult {
  SuperMatrix phi;
  int degree = 0;  // highest power of μ that survives
};
ExpResult exp_moment(const Setting& st, const SuperMatrix& m);

// twist bivector ½ t_V
MultiVector rmatrix_bivector(const Setting& st, const Grassmann& t);
// image of the Cartan trivector
MultiVector phi_v(const Setting& st);

CheckResult check_hamiltonian(const Setting& st, const MultiVector& pi, const MomentMap& mu);
// x_V(⟨μ, y⟩) = ⟨μ, [x, y]⟩
CheckResult check_moment_equivariance(const Setting& st, const MomentMap& mu);
// [[π, π]] against `expected` (φ_V when null)
CheckResult check_quasi_poisson(const Setting& st, const MultiVector& pi, const MultiVector* expected = nullptr);
// π♯(tr(x Φ⁻¹dΦ)) = ½((1 + Ad_Φ)x)_V; in the even case compared below coordinate degree exact_below
CheckResult check_group_moment(const Setting& st, const MultiVector& pi, const SuperMatrix& phi, int exact_below = -1);
// π♯(κ tr((dL₊L₊⁻¹ − dL₋L₋⁻¹) x)) = x_V
CheckResult check_lu_moment(const Setting& st, const MultiVector& pi, const GStarElement& l, const Q& kappa,
                            int exact_below = -1);
// x_V(Φ) = [Φ, ρ_W(x)] entrywise
CheckResult check_phi_equivariance(const Setting& st, const SuperMatrix& phi);
// the substitution x_i -> F_i carries `from` to `to`: {F_i, F_j}_to = subs({x_i, x_j}_from)
CheckResult check_change_of_variables(const MultiVector& from, const MultiVector& to,
                                      const std::vector<SuperPoly>& subs);
CheckResult compare(const std::string& name, const SuperPoly& got, const SuperPoly& want);
CheckResult compare(const std::string& name, const SuperMatrix& got, const SuperMatrix& want);

// drops every term of coordinate degree ≥ d (no-op for d < 0)
SuperPoly below_degree(const SuperPoly& p, uint64_t coord_mask, int d);

// Kappa fixed on the odd adjoint sl(2) example and frozen.
inline const Q kLuKappa{1};

}  // namespace qm
