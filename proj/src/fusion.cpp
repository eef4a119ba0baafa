#include "qm/fusion.hpp"

#include <chrono>

namespace qm {

Q fusion_constant(int n, Parity p) {
  Q sign = p == Parity::Odd ? Q(-1) : Q(1);
  return -sign / 2 - Q(1, 2 * n);
}

Fusion fusion_bivector(int n, Parity p) {
  if (n < 2 || n > 4) throw AlgebraError("fusion bivector: sl(" + std::to_string(n) + ") outside desk scale");
  auto g = build_lie_algebra(Family::SL, n);
  auto v = vector_module(g);
  auto rep = with_parity(direct_sum({v, dual_module(v)}), p);
  Fusion f;
  f.st = make_setting(rep);
  f.n = n;
  f.s = p == Parity::Odd ? 1 : 0;
  f.c = fusion_constant(n, p);
  const auto& sp = f.st.space;
  f.pi_b = bilinear_bivector(*rep, sp);
  f.twist = rmatrix_bivector(f.st, standard_r_matrix(*g).t);

  std::vector<MultiVector> images;
  for (int a = 0; a < g->dim(); ++a) images.push_back(partial_vector_field(*rep, sp, a, 0, n));
  for (int a = 0; a < g->dim(); ++a) images.push_back(partial_vector_field(*rep, sp, a, n, 2 * n));
  f.psi = fusion_psi(*g).lift(images);

  SuperPoly ev = sp->zero(), ew = sp->zero();
  for (int i = 0; i < n; ++i) {
    ev += sp->x(i) * sp->theta(i);
    ew += sp->x(n + i) * sp->theta(n + i);
  }
  f.pi_cor = MultiVector(sp, ev * ew);
  f.pi_w = -f.twist - f.psi - f.pi_cor * f.c;

  SuperPoly mixed = sp->zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mixed += sp->x(n + j) * sp->x(i) * sp->theta(i) * sp->theta(n + j);
  f.pi_w_alt = -f.twist - f.psi + f.pi_cor * Q(1, 2 * n) + MultiVector(sp, mixed) * Q(1, 2);
  return f;
}

namespace {

CheckResult zero_check(const std::string& name, const MultiVector& m) {
  CheckResult r{name, m.is_zero(), {}, "", 0};
  if (!m.is_zero()) r.residuals.push_back(m.str());
  return r;
}

}  // namespace

std::vector<CheckResult> fusion_identities(const Fusion& f) {
  using Clock = std::chrono::steady_clock;
  std::vector<CheckResult> out;
  auto timed = [&](const std::string& name, auto&& fn) {
    auto t0 = Clock::now();
    CheckResult r = fn();
    r.name = name;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  };
  timed("fusion:[[pi_W,pi_W]]=0", [&] { return zero_check("", schouten(f.pi_w, f.pi_w)); });
  timed("fusion:[[pi_B,pi_W]]=0", [&] { return zero_check("", schouten(f.pi_b, f.pi_w)); });
  timed("fusion:L_x pi_W=-delta(x)/2", [&] {
    CheckResult r{"", true, {}, "", 0};
    auto rm = standard_r_matrix(*f.st.g);
    for (int a = 0; a < f.st.dim_g(); ++a) {
      auto lhs = schouten(f.st.lifts[a], f.pi_w);
      auto rhs = rm.cobracket[a].lift(f.st.lifts) * Q(-1, 2);
      auto d = lhs - rhs;
      if (!d.is_zero()) {
        r.pass = false;
        r.residuals.push_back(f.st.g->basis_labels[a] + ": " + d.str());
      }
    }
    return r;
  });
  timed("fusion:forms-agree", [&] { return zero_check("", f.pi_w - f.pi_w_alt); });
  return out;
}

std::vector<CheckResult> fusion_lemmas(const Fusion& f) {
  std::vector<CheckResult> out;
  auto phi = phi_v(f.st);
  out.push_back(zero_check("fusion:[[tau,tau]]+phi", schouten(f.twist, f.twist) + phi));
  out.push_back(zero_check("fusion:[[psi,psi]]-phi", schouten(f.psi, f.psi) - phi));
  out.push_back(zero_check("fusion:[[tau,psi]]", schouten(f.twist, f.psi)));
  out.push_back(zero_check("fusion:[[tau,pi_cor]]", schouten(f.twist, f.pi_cor)));
  out.push_back(zero_check("fusion:[[psi,pi_cor]]", schouten(f.psi, f.pi_cor)));
  return out;
}

}  // namespace qm
