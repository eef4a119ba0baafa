#include "qm/factorize.hpp"

namespace qm {

GaussFactors gauss_udl(const SuperMatrix& phi) {
  int n = phi.size(), tr = phi.truncation();
  const auto& t = phi.table();
  SuperMatrix w = phi;
  GaussFactors f{SuperMatrix::identity(t, n, tr), SuperMatrix(t, n, tr), SuperMatrix::identity(t, n, tr)};
  for (int k = n - 1; k >= 0; --k) {
    const SuperPoly p = w(k, k);
    if (p.body() == 0) throw AlgebraError("Gauss factorization: minor " + std::to_string(k + 1) + " is not invertible");
    SuperPoly inv = super_inverse(p, tr);
    f.diagonal(k, k) = p;
    for (int i = 0; i < k; ++i) f.upper(i, k) = SuperPoly::multiply(w(i, k), inv, tr);
    for (int j = 0; j < k; ++j) f.lower(k, j) = SuperPoly::multiply(inv, w(k, j), tr);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (f.upper(i, k).is_zero() || w(k, j).is_zero()) continue;
        w(i, j) -= SuperPoly::multiply(f.upper(i, k), w(k, j), tr);
      }
  }
  return f;
}

GStarElement gauss_factorize(const SuperMatrix& phi) {
  int n = phi.size(), tr = phi.truncation();
  const auto& t = phi.table();
  auto f = gauss_udl(phi);
  SuperMatrix half(t, n, tr), ihalf(t, n, tr);
  for (int i = 0; i < n; ++i) {
    half(i, i) = super_sqrt(f.diagonal(i, i), tr);
    ihalf(i, i) = super_inverse_sqrt(f.diagonal(i, i), tr);
  }
  return {f.upper * half, super_inverse(f.lower) * ihalf};
}

bool valid_gstar(const GStarElement& l) {
  if (!l.plus.is_upper_triangular() || !l.minus.is_lower_triangular()) return false;
  int tr = l.plus.truncation();
  for (int i = 0; i < l.plus.size(); ++i) {
    auto p = SuperPoly::multiply(l.plus(i, i), l.minus(i, i), tr);
    if (p != SuperPoly::constant(l.plus.table(), 1)) return false;
  }
  return true;
}

}  // namespace qm
