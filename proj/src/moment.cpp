#include "qm/moment.hpp"

#include <chrono>

namespace qm {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void record(CheckResult& r, const std::string& label, const SuperPoly& residual) {
  if (residual.is_zero()) return;
  r.pass = false;
  r.residuals.push_back(label + ": " + residual.str());
}

// exact solution of a x = b; throws when inconsistent
QVec solve(const QMatrix& a, const QVec& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = -b[i];
  }
  for (auto& v : nullspace(aug)) {
    Q last = v.back();
    if (last == 0) continue;
    QVec x(a.cols());
    for (int j = 0; j < a.cols(); ++j) x[j] = v[j] / last;
    return x;
  }
  throw AlgebraError("linear system has no solution");
}

// Σ_k B_{2n} recurrence: B_m = -1/(m+1) Σ_{k<m} C(m+1,k) B_k
std::vector<Q> bernoulli(int m) {
  std::vector<Q> b(m + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Q s = 0;
    mpz_class c = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      s += Q(c) * b[k];
      c = c * (n + 1 - k) / (k + 1);
    }
    b[n] = -s / (n + 1);
  }
  return b;
}

SuperMatrix mul_parallel(const SuperMatrix& a, const SuperMatrix& b) {
  int n = a.size();
  SuperMatrix r(a.table(), n, a.truncation());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) r(i, j) += SuperPoly::multiply(a(i, k), b(k, j), a.truncation());
    }
  return r;
}

SuperMatrix rder_matrix(const SuperMatrix& m, int i) {
  return m.map([i](const SuperPoly& p) { return p.rder(i); });
}

}  // namespace

MultiVector Setting::dual_lift(int a) const {
  MultiVector r = MultiVector::zero(space);
  for (int b = 0; b < dim_g(); ++b)
    if (g->form_inv(a, b) != 0) r += lifts[b] * g->form_inv(a, b);
  return r;
}

MultiVector Setting::lift_matrix(const SuperMatrix& y) const {
  MultiVector r = MultiVector::zero(space);
  for (int a = 0; a < dim_g(); ++a) {
    auto c = (y * SuperMatrix::from(space->table(), w_dual[a], y.truncation())).trace();
    if (!c.is_zero()) r += MultiVector(space, c * lifts[a].poly());
  }
  return r;
}

Setting make_setting(const ModulePtr& rep, int truncation) {
  Setting st;
  st.g = rep->g;
  st.rep = rep;
  st.space = phase_space(*rep);
  st.lifts = basis_lifts(*rep, st.space);
  st.truncation = rep->parity == Parity::Even ? truncation : -1;
  int d = st.g->dim();
  for (int a = 0; a < d; ++a) {
    QMatrix m(st.g->n, st.g->n);
    for (int b = 0; b < d; ++b)
      if (st.g->form_inv(a, b) != 0) m = m + st.g->defining[b] * st.g->form_inv(a, b);
    st.w_dual.push_back(m);
  }
  return st;
}

MultiVector bilinear_bivector(const ModuleRep& rep, const SpacePtr& s) {
  if (!rep.has_form) throw AlgebraError("module " + rep.label + " has no invariant form");
  int n = s->dim();
  std::vector<MultiVector> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto m = s->theta(i) * s->theta(j);
      if (!m.is_zero()) unknowns.emplace_back(s, m);
    }
  int u = static_cast<int>(unknowns.size());
  QMatrix a(n * n, u);
  QVec b(n * n);
  for (int k = 0; k < u; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i * n + j, k) = apply_bivector(unknowns[k], s->x(i), s->x(j)).body();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i * n + j] = 2 * rep.form(i, j);
  QVec x = solve(a, b);
  MultiVector r = MultiVector::zero(s);
  for (int k = 0; k < u; ++k)
    if (x[k] != 0) r += unknowns[k] * x[k];
  return r;
}

MomentMap moment_map(const Setting& st) {
  const auto& rep = *st.rep;
  if (!rep.has_form) throw AlgebraError("module " + rep.label + " has no invariant form");
  const auto& s = *st.space;
  int n = rep.dim;
  QMatrix binv = inverse(rep.form);
  std::vector<SuperPoly> dual(n, s.zero());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (binv(j, k) != 0) dual[j] += s.x(k) * binv(j, k);
  MomentMap mu{st.space, {}};
  for (int a = 0; a < st.dim_g(); ++a) {
    const auto& rho = rep.action[a];
    SuperPoly c = s.zero();
    for (int j = 0; j < n; ++j) {
      SuperPoly xv = s.zero();
      for (int k = 0; k < n; ++k)
        if (rho(k, j) != 0) xv += s.x(k) * rho(k, j);
      if (!xv.is_zero()) c += xv * dual[j];
    }
    mu.components.push_back(c * Q(1, 4));
  }
  return mu;
}

MomentMap scaled(const MomentMap& mu, const Q& c) {
  MomentMap r = mu;
  for (auto& p : r.components) p *= c;
  return r;
}

std::vector<SuperPoly> moment_element(const Setting& st, const MomentMap& mu) {
  int d = st.dim_g();
  std::vector<SuperPoly> out(d, st.space->zero());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (st.g->form_inv(a, b) != 0) out[b] += mu.components[a] * st.g->form_inv(a, b);
  return out;
}

MomentMap moment_from_element(const Setting& st, const std::vector<SuperPoly>& element) {
  int d = st.dim_g();
  MomentMap mu{st.space, std::vector<SuperPoly>(d, st.space->zero())};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (st.g->form(b, a) != 0) mu.components[a] += element[b] * st.g->form(b, a);
  return mu;
}

std::string moment_str(const Setting& st, const std::vector<SuperPoly>& element) {
  std::string out;
  for (int b = 0; b < st.dim_g(); ++b) {
    if (element[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + element[b].str() + ")⊗" + st.g->basis_labels[b];
  }
  return out.empty() ? "0" : out;
}

SuperMatrix moment_matrix(const Setting& st, const MomentMap& mu) {
  int n = st.n_w();
  SuperMatrix m(st.space->table(), n, st.truncation);
  for (int a = 0; a < st.dim_g(); ++a) {
    if (mu.components[a].is_zero()) continue;
    const auto& w = st.w_dual[a];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (w(i, j) != 0) m(i, j) += mu.components[a] * w(i, j);
  }
  return m;
}

SuperMatrix ad_mu(const Setting& st, const MomentMap& mu) {
  const auto& g = *st.g;
  int d = g.dim();
  SuperMatrix m(st.space->table(), d, st.truncation);
  for (int a = 0; a < d; ++a) {
    if (mu.components[a].is_zero()) continue;
    for (int e = 0; e < d; ++e) {
      Q w = g.form_inv(a, e);
      if (w == 0) continue;
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
          const Q& f = g.structure[e][b][c];
          if (f != 0) m(c, b) += mu.components[a] * (w * f);
        }
    }
  }
  return m;
}

int ad_mu_nilpotency(const Setting& st, const MomentMap& mu) {
  auto a = ad_mu(st, mu);
  if (a.is_zero()) return 1;
  int bound = std::max(st.dim_g() + 1, st.rep->dim / 2 + 1) + 1;
  auto p = a;
  for (int k = 2; k <= bound; ++k) {
    p = mul_parallel(p, a);
    if (p.is_zero()) return k;
  }
  throw AlgebraError("ad_mu is not nilpotent below " + std::to_string(bound));
}

Q phi_coefficient(int k) {
  if (k < 1 || k % 2 == 0) return 0;
  int m = k + 1;
  auto b = bernoulli(m);
  mpz_class fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  return -b[m] / Q(fact);
}

MultiVector dynamical_correction(const Setting& st, const MomentMap& mu) {
  ad_mu_nilpotency(st, mu);
  auto a = ad_mu(st, mu);
  int d = st.dim_g();
  SuperMatrix t(st.space->table(), d, st.truncation);
  SuperMatrix p = a;
  for (int k = 1; !p.is_zero(); ++k) {
    if (k % 2 == 1) t = t + p * phi_coefficient(k);
    p = mul_parallel(p, a);
  }
  MultiVector r = MultiVector::zero(st.space);
  for (int ai = 0; ai < d; ++ai) {
    SuperPoly tu = st.space->zero();
    for (int c = 0; c < d; ++c)
      if (!t(c, ai).is_zero()) tu += t(c, ai) * st.lifts[c].poly();
    if (tu.is_zero()) continue;
    r += MultiVector(st.space, st.dual_lift(ai).poly() * tu);
  }
  r *= Q(1, 2);
  return r;
}

ExpResult exp_moment(const Setting& st, const SuperMatrix& m) {
  ExpResult r;
  r.phi = super_exp(m, &r.degree);
  return r;
}

MultiVector rmatrix_bivector(const Setting& st, const Grassmann& t) { return t.lift(st.lifts) * Q(1, 2); }

MultiVector phi_v(const Setting& st) { return cartan_trivector(*st.g).lift(st.lifts); }

SuperPoly below_degree(const SuperPoly& p, uint64_t coord_mask, int d) {
  if (d < 0) return p;
  SuperPoly r(p.table());
  for (const auto& [m, c] : p.terms())
    if (m.degree_in(coord_mask) < d) r.add_term(m, c);
  return r;
}

CheckResult check_hamiltonian(const Setting& st, const MultiVector& pi, const MomentMap& mu) {
  auto t0 = Clock::now();
  CheckResult r{"hamiltonian", true, {}, "", 0};
  for (int a = 0; a < st.dim_g(); ++a) {
    auto x = hamiltonian_field(pi, mu.components[a]);
    record(r, st.g->basis_labels[a], (x - st.lifts[a]).poly());
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_moment_equivariance(const Setting& st, const MomentMap& mu) {
  auto t0 = Clock::now();
  CheckResult r{"moment-equivariance", true, {}, "", 0};
  const auto& g = *st.g;
  int d = g.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto lhs = apply_vector_field(st.lifts[a], mu.components[b]);
      SuperPoly rhs = st.space->zero();
      for (int c = 0; c < d; ++c)
        if (g.structure[a][b][c] != 0) rhs += mu.components[c] * g.structure[a][b][c];
      record(r, g.basis_labels[a] + "·" + g.basis_labels[b], lhs - rhs);
    }
  r.seconds = since(t0);
  return r;
}

CheckResult check_quasi_poisson(const Setting& st, const MultiVector& pi, const MultiVector* expected) {
  auto t0 = Clock::now();
  CheckResult r{"quasi-poisson", true, {}, "", 0};
  auto sq = schouten(pi, pi);
  auto want = expected ? *expected : phi_v(st);
  record(r, "[[π,π]] - φ", (sq - want).poly());
  if (!expected) r.note = want.is_zero() ? "φ_V = 0" : "φ_V ≠ 0";
  r.seconds = since(t0);
  return r;
}

CheckResult check_group_moment(const Setting& st, const MultiVector& pi, const SuperMatrix& phi, int exact_below) {
  auto t0 = Clock::now();
  CheckResult r{"group-moment", true, {}, "", 0};
  auto inv = super_inverse(phi);
  const auto& tab = st.space->table();
  int dim = st.space->dim();
  std::vector<SuperMatrix> mc;
  for (int i = 0; i < dim; ++i) mc.push_back(inv * rder_matrix(phi, i));
  for (int a = 0; a < st.dim_g(); ++a) {
    auto x = SuperMatrix::from(tab, st.g->defining[a], phi.truncation());
    std::vector<SuperPoly> alpha;
    for (int i = 0; i < dim; ++i) alpha.push_back((x * mc[i]).trace());
    auto lhs = sharp(pi, alpha);
    auto y = (x + phi * x * inv) * Q(1, 2);
    auto rhs = st.lift_matrix(y);
    record(r, st.g->basis_labels[a], below_degree((lhs - rhs).poly(), st.space->coord_mask(), exact_below));
  }
  if (exact_below >= 0) r.note = "to coordinate degree " + std::to_string(exact_below - 1);
  r.seconds = since(t0);
  return r;
}

CheckResult check_lu_moment(const Setting& st, const MultiVector& pi, const GStarElement& l, const Q& kappa,
                            int exact_below) {
  auto t0 = Clock::now();
  CheckResult r{"lu-moment", true, {}, "", 0};
  if (!valid_gstar(l)) throw AlgebraError("lu moment: invalid G* element");
  auto pinv = super_inverse(l.plus), minv = super_inverse(l.minus);
  const auto& tab = st.space->table();
  int dim = st.space->dim();
  std::vector<SuperMatrix> theta;
  for (int i = 0; i < dim; ++i) theta.push_back(rder_matrix(l.plus, i) * pinv - rder_matrix(l.minus, i) * minv);
  for (int a = 0; a < st.dim_g(); ++a) {
    auto x = SuperMatrix::from(tab, st.g->defining[a], l.plus.truncation());
    std::vector<SuperPoly> alpha;
    for (int i = 0; i < dim; ++i) alpha.push_back((theta[i] * x).trace() * kappa);
    auto lhs = sharp(pi, alpha);
    record(r, st.g->basis_labels[a],
           below_degree((lhs - st.lifts[a]).poly(), st.space->coord_mask(), exact_below));
  }
  r.note = "kappa = " + kappa.get_str();
  if (exact_below >= 0) r.note += ", to coordinate degree " + std::to_string(exact_below - 1);
  r.seconds = since(t0);
  return r;
}

CheckResult check_phi_equivariance(const Setting& st, const SuperMatrix& phi) {
  auto t0 = Clock::now();
  CheckResult r{"phi-equivariance", true, {}, "", 0};
  const auto& tab = st.space->table();
  for (int a = 0; a < st.dim_g(); ++a) {
    auto x = SuperMatrix::from(tab, st.g->defining[a], phi.truncation());
    auto want = phi * x - x * phi;
    auto got = phi.map([&](const SuperPoly& p) { return apply_vector_field(st.lifts[a], p); });
    auto diff = got - want;
    if (st.truncation >= 0) diff = diff.truncated(st.truncation);
    for (int i = 0; i < phi.size(); ++i)
      for (int j = 0; j < phi.size(); ++j)
        record(r, st.g->basis_labels[a] + "(" + std::to_string(i) + "," + std::to_string(j) + ")", diff(i, j));
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_change_of_variables(const MultiVector& from, const MultiVector& to,
                                      const std::vector<SuperPoly>& subs) {
  auto t0 = Clock::now();
  CheckResult r{"change-of-variables", true, {}, "", 0};
  const auto& s = from.space();
  std::map<int, SuperPoly> images;
  for (int i = 0; i < s->dim(); ++i) images.emplace(i, subs[i]);
  for (int i = 0; i < s->dim(); ++i)
    for (int j = 0; j < s->dim(); ++j) {
      auto lhs = apply_bivector(to, subs[i], subs[j]);
      auto rhs = apply_bivector(from, s->x(i), s->x(j)).substitute(images);
      record(r, "{" + s->coord_name(i) + "," + s->coord_name(j) + "}", lhs - rhs);
    }
  r.seconds = since(t0);
  return r;
}

CheckResult compare(const std::string& name, const SuperPoly& got, const SuperPoly& want) {
  CheckResult r{name, true, {}, "", 0};
  record(r, "difference", got - want);
  if (!r.pass) r.note = "got " + got.str() + "; expected " + want.str();
  return r;
}

CheckResult compare(const std::string& name, const SuperMatrix& got, const SuperMatrix& want) {
  CheckResult r{name, true, {}, "", 0};
  if (got.size() != want.size()) {
    r.pass = false;
    r.note = "size mismatch";
    return r;
  }
  auto d = got - want;
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) record(r, "(" + std::to_string(i) + "," + std::to_string(j) + ")", d(i, j));
  if (!r.pass) r.note = "got " + got.str() + "; expected " + want.str();
  return r;
}

}  // namespace qm
