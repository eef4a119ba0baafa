#include "qm/liealg.hpp"

#include <regex>

namespace qm {

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SO: return "so";
    case Family::SP: return "sp";
    case Family::GL: return "gl";
  }
  return "?";
}

int LieAlgebra::index(const std::string& l) const {
  for (int a = 0; a < dim(); ++a)
    if (basis_labels[a] == l) return a;
  throw AlgebraError("no basis element " + l + " in " + label);
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim());
  for (int a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      Q s = x[a] * y[b];
      for (int c = 0; c < dim(); ++c)
        if (structure[a][b][c] != 0) out[c] += s * structure[a][b][c];
    }
  }
  return out;
}

QVec LieAlgebra::coords_of(const QMatrix& m) const {
  QVec t(dim()), out(dim());
  for (int b = 0; b < dim(); ++b) t[b] = (m * defining[b]).trace();
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      if (form_inv(b, a) != 0) out[a] += t[b] * form_inv(b, a);
  return out;
}

QMatrix LieAlgebra::matrix_of(const QVec& x) const {
  QMatrix m(n, n);
  for (int a = 0; a < dim(); ++a)
    if (x[a] != 0) m = m + defining[a] * x[a];
  return m;
}

Q LieAlgebra::f(int a, int b, int c) const {
  Q s = 0;
  for (int d = 0; d < dim(); ++d)
    if (structure[b][c][d] != 0) s += form(a, d) * structure[b][c][d];
  return s;
}

QVec LieAlgebra::dual(int a) const {
  QVec v(dim());
  for (int b = 0; b < dim(); ++b) v[b] = form_inv(a, b);
  return v;
}

namespace {

QMatrix unit(int n, int i, int j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

// split bilinear form: antidiagonal, skew-signed for sp
QMatrix split_form(Family f, int n) {
  QMatrix j(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = (f == Family::SP && i >= n / 2) ? -1 : 1;
  return j;
}

void finish(LieAlgebra& g) {
  int d = g.dim();
  g.form = QMatrix(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) g.form(a, b) = (g.defining[a] * g.defining[b]).trace();
  g.form_inv = inverse(g.form);
  g.structure.assign(d, std::vector<QVec>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      QMatrix c = commutator(g.defining[a], g.defining[b]);
      g.structure[a][b] = g.coords_of(c);
      if (g.matrix_of(g.structure[a][b]) != c) throw AlgebraError("basis does not close under bracket");
    }
  g.roots.assign(d, {});
  for (int a = 0; a < d; ++a) {
    for (int h : g.cartan) {
      QMatrix c = commutator(g.defining[h], g.defining[a]);
      Q lam = 0;
      bool found = false;
      for (int i = 0; i < g.n && !found; ++i)
        for (int j = 0; j < g.n && !found; ++j)
          if (g.defining[a](i, j) != 0) {
            lam = c(i, j) / g.defining[a](i, j);
            found = true;
          }
      if (c != g.defining[a] * lam) throw AlgebraError("basis element is not a weight vector");
      Q twice = lam * 2;
      g.roots[a].push_back(static_cast<int>(twice.get_num().get_si()));
    }
  }
  for (int p : g.positive) {
    bool decomposable = false;
    for (int q : g.positive)
      for (int r : g.positive) {
        std::vector<int> s(g.cartan.size());
        for (size_t k = 0; k < s.size(); ++k) s[k] = g.roots[q][k] + g.roots[r][k];
        if (s == g.roots[p]) decomposable = true;
      }
    if (!decomposable) g.simple.push_back(p);
  }
}

std::string idx_label(const char* prefix, int i, int j) {
  return std::string(prefix) + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

AlgebraPtr build_lie_algebra(Family family, int n) {
  auto g = std::make_shared<LieAlgebra>();
  g->family = family;
  g->n = n;
  g->label = family_name(family) + "(" + std::to_string(n) + ")";
  std::vector<QMatrix> pos, neg, car;
  std::vector<std::string> lpos, lneg, lcar;
  if (family == Family::SL || family == Family::GL) {
    if (n < 2 || n > 4) throw AlgebraError("unsupported rank for " + g->label);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        pos.push_back(unit(n, i, j));
        neg.push_back(unit(n, j, i));
        lpos.push_back(idx_label("E", i, j));
        lneg.push_back(idx_label("E", j, i));
      }
    if (family == Family::SL) {
      for (int i = 0; i + 1 < n; ++i) {
        car.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
        lcar.push_back("H" + std::to_string(i + 1));
      }
    } else {
      for (int i = 0; i < n; ++i) {
        car.push_back(unit(n, i, i));
        lcar.push_back(idx_label("E", i, i));
      }
    }
    if (family == Family::SL && n == 2) {
      lpos = {"e"};
      lneg = {"f"};
      lcar = {"h"};
    }
  } else {
    bool sp = family == Family::SP;
    if (sp && (n % 2 != 0 || n < 2 || n > 6)) throw AlgebraError("unsupported rank for " + g->label);
    if (!sp && (n < 3 || n > 8)) throw AlgebraError("unsupported rank for " + g->label);
    QMatrix J = split_form(family, n);
    auto bar = [n](int i) { return n - 1 - i; };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // X = E_ij + s E_j'i' with s = -J(i,i')/J(j,j')
        int ib = bar(i), jb = bar(j);
        std::pair<int, int> other{jb, ib};
        if (other < std::make_pair(i, j)) continue;
        Q s = -J(i, ib) / J(j, jb);
        QMatrix x = unit(n, i, j) + unit(n, jb, ib) * s;
        if (other == std::make_pair(i, j)) {
          if (x.is_zero()) continue;
          x = unit(n, i, j);
        }
        pos.push_back(x);
        neg.push_back(x.transpose());
        lpos.push_back(idx_label("X", i, j));
        lneg.push_back(idx_label("X", j, i));
      }
    for (int k = 0; k < n / 2; ++k) {
      car.push_back(unit(n, k, k) - unit(n, bar(k), bar(k)));
      lcar.push_back("H" + std::to_string(k + 1));
    }
  }
  for (size_t i = 0; i < pos.size(); ++i) {
    g->positive.push_back(static_cast<int>(g->defining.size()));
    g->defining.push_back(pos[i]);
    g->basis_labels.push_back(lpos[i]);
  }
  for (size_t i = 0; i < car.size(); ++i) {
    g->cartan.push_back(static_cast<int>(g->defining.size()));
    g->defining.push_back(car[i]);
    g->basis_labels.push_back(lcar[i]);
  }
  for (size_t i = 0; i < neg.size(); ++i) {
    g->negative.push_back(static_cast<int>(g->defining.size()));
    g->defining.push_back(neg[i]);
    g->basis_labels.push_back(lneg[i]);
  }
  finish(*g);
  return g;
}

AlgebraPtr parse_algebra(const std::string& spec) {
  static const std::regex re(R"(\s*(sl|so|sp|gl)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw AlgebraError("cannot parse algebra '" + spec + "'");
  std::string fam = m[1];
  int n = std::stoi(m[2]);
  Family f = fam == "sl" ? Family::SL : fam == "so" ? Family::SO : fam == "sp" ? Family::SP : Family::GL;
  return build_lie_algebra(f, n);
}

}  // namespace qm
