#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>

#include "qm/liealg.hpp"

namespace qm {

namespace {

std::vector<std::vector<int>> weights_from_action(const LieAlgebra& g, const std::vector<QMatrix>& action, int dim) {
  std::vector<std::vector<int>> w(dim);
  for (int h : g.cartan) {
    const QMatrix& m = action[h];
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j)
        if (i != j && m(i, j) != 0) throw AlgebraError("Cartan element does not act diagonally");
      Q twice = m(i, i) * 2;
      if (twice.get_den() != 1) throw AlgebraError("weight is not a half-integer");
      w[i].push_back(static_cast<int>(twice.get_num().get_si()));
    }
  }
  return w;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> multisets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

ModulePtr vector_module(const AlgebraPtr& g) {
  auto m = std::make_shared<ModuleRep>();
  m->g = g;
  m->kind = ModuleKind::Vector;
  m->label = "v1";
  m->dim = g->n;
  m->action = g->defining;
  m->weights = weights_from_action(*g, m->action, m->dim);
  return m;
}

ModulePtr adjoint_module(const AlgebraPtr& g) {
  auto m = std::make_shared<ModuleRep>();
  m->g = g;
  m->kind = ModuleKind::Adjoint;
  m->label = "adjoint";
  int d = g->dim();
  m->dim = d;
  for (int a = 0; a < d; ++a) {
    QMatrix x(d, d);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) x(c, b) = g->structure[a][b][c];
    m->action.push_back(x);
  }
  m->weights = g->roots;
  return m;
}

ModulePtr trivial_module(const AlgebraPtr& g) {
  auto m = std::make_shared<ModuleRep>();
  m->g = g;
  m->kind = ModuleKind::Trivial;
  m->label = "trivial";
  m->dim = 1;
  m->action.assign(g->dim(), QMatrix(1, 1));
  m->weights.assign(1, std::vector<int>(g->cartan.size(), 0));
  return m;
}

ModulePtr dual_module(const ModulePtr& src) {
  auto m = std::make_shared<ModuleRep>();
  m->g = src->g;
  m->kind = ModuleKind::Dual;
  m->label = src->label + "dual";
  m->dim = src->dim;
  for (const auto& a : src->action) m->action.push_back(-a.transpose());
  m->weights = src->weights;
  for (auto& w : m->weights)
    for (auto& x : w) x = -x;
  return m;
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw AlgebraError("empty direct sum");
  auto m = std::make_shared<ModuleRep>();
  m->g = parts[0]->g;
  m->kind = ModuleKind::DirectSum;
  int d = 0;
  for (const auto& p : parts) {
    m->block_offsets.push_back(d);
    d += p->dim;
    m->label += (m->label.empty() ? "" : "+") + p->label;
  }
  m->dim = d;
  for (int a = 0; a < m->g->dim(); ++a) {
    QMatrix x(d, d);
    for (size_t k = 0; k < parts.size(); ++k) {
      int o = m->block_offsets[k];
      const QMatrix& pa = parts[k]->action[a];
      for (int i = 0; i < parts[k]->dim; ++i)
        for (int j = 0; j < parts[k]->dim; ++j) x(o + i, o + j) = pa(i, j);
    }
    m->action.push_back(x);
  }
  for (const auto& p : parts) m->weights.insert(m->weights.end(), p->weights.begin(), p->weights.end());
  return m;
}

ModulePtr wedge_module(const ModulePtr& src, int k) {
  auto m = std::make_shared<ModuleRep>();
  m->g = src->g;
  m->kind = ModuleKind::Wedge;
  m->label = "wedge" + std::to_string(k) + "(" + src->label + ")";
  auto basis = subsets(src->dim, k);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
  m->dim = static_cast<int>(basis.size());
  for (int a = 0; a < m->g->dim(); ++a) {
    QMatrix x(m->dim, m->dim);
    const QMatrix& r = src->action[a];
    for (int col = 0; col < m->dim; ++col) {
      const auto& s = basis[col];
      for (int slot = 0; slot < k; ++slot)
        for (int i = 0; i < src->dim; ++i) {
          if (r(i, s[slot]) == 0) continue;
          auto t = s;
          t[slot] = i;
          // sort with sign
          int sign = 1;
          bool dup = false;
          for (int p = 0; p < k && !dup; ++p)
            for (int q = p + 1; q < k; ++q) {
              if (t[p] == t[q]) dup = true;
              else if (t[p] > t[q]) sign = -sign;
            }
          if (dup) continue;
          std::sort(t.begin(), t.end());
          x(pos[t], col) += r(i, s[slot]) * sign;
        }
    }
    m->action.push_back(x);
  }
  for (const auto& s : basis) {
    std::vector<int> w(m->g->cartan.size(), 0);
    for (int i : s)
      for (size_t c = 0; c < w.size(); ++c) w[c] += src->weights[i][c];
    m->weights.push_back(w);
  }
  return m;
}

ModulePtr sym_module(const ModulePtr& src, int k) {
  auto m = std::make_shared<ModuleRep>();
  m->g = src->g;
  m->kind = ModuleKind::Sym;
  m->label = "sym" + std::to_string(k) + "(" + src->label + ")";
  auto basis = multisets(src->dim, k);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
  m->dim = static_cast<int>(basis.size());
  for (int a = 0; a < m->g->dim(); ++a) {
    QMatrix x(m->dim, m->dim);
    const QMatrix& r = src->action[a];
    for (int col = 0; col < m->dim; ++col) {
      const auto& s = basis[col];
      for (int slot = 0; slot < k; ++slot)
        for (int i = 0; i < src->dim; ++i) {
          if (r(i, s[slot]) == 0) continue;
          auto t = s;
          t[slot] = i;
          std::sort(t.begin(), t.end());
          x(pos[t], col) += r(i, s[slot]);
        }
    }
    m->action.push_back(x);
  }
  for (const auto& s : basis) {
    std::vector<int> w(m->g->cartan.size(), 0);
    for (int i : s)
      for (size_t c = 0; c < w.size(); ++c) w[c] += src->weights[i][c];
    m->weights.push_back(w);
  }
  return m;
}

// Fermionic oscillators on ⋀C^r, r = n/2: γ(f_i) = a_i^†, γ(f_{n-1-i}) = a_i,
// so that {γ(u), γ(v)} = B(u, v) for the split form B. The spin action is
// ρ(X) = ½ Σ_a γ(X f_a) γ(f^a), made traceless.
ModulePtr spinor_module(const AlgebraPtr& g, bool even_half) {
  if (g->family != Family::SO || g->n % 2 != 0) throw AlgebraError("spinors need so(2r)");
  int n = g->n, r = n / 2, full = 1 << r;
  auto create = [&](int i) {
    QMatrix c(full, full);
    for (int s = 0; s < full; ++s) {
      if (s & (1 << i)) continue;
      int sign = (__builtin_popcount(s & ((1 << i) - 1)) & 1) ? -1 : 1;
      c(s | (1 << i), s) = sign;
    }
    return c;
  };
  std::vector<QMatrix> gamma(n);
  for (int i = 0; i < r; ++i) {
    gamma[i] = create(i);
    gamma[n - 1 - i] = create(i).transpose();
  }
  auto gamma_of = [&](const QVec& v) {
    QMatrix m(full, full);
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) m = m + gamma[i] * v[i];
    return m;
  };
  std::vector<int> keep;
  for (int s = 0; s < full; ++s)
    if ((__builtin_popcount(s) % 2 == 0) == even_half) keep.push_back(s);
  auto m = std::make_shared<ModuleRep>();
  m->g = g;
  m->kind = ModuleKind::Spinor;
  m->label = even_half ? "spinor+" : "spinor-";
  m->dim = static_cast<int>(keep.size());
  for (int a = 0; a < g->dim(); ++a) {
    QMatrix rho(full, full);
    for (int k = 0; k < n; ++k) {
      QVec e(n);
      e[k] = 1;
      QVec xe = g->defining[a].apply(e);
      // the dual of f_k under the split form is f_{n-1-k}
      rho = rho + gamma_of(xe) * gamma[n - 1 - k] * Q(1, 2);
    }
    Q tr = rho.trace() / full;
    rho = rho - QMatrix::identity(full) * tr;
    QMatrix x(m->dim, m->dim);
    for (int i = 0; i < m->dim; ++i)
      for (int j = 0; j < m->dim; ++j) x(i, j) = rho(keep[i], keep[j]);
    m->action.push_back(x);
  }
  m->weights = weights_from_action(*g, m->action, m->dim);
  return m;
}

std::vector<QMatrix> invariant_forms(const ModuleRep& m, int symmetry) {
  int d = m.dim;
  int nunk = d * d;
  std::vector<std::vector<std::pair<int, Q>>> eqs;
  // ρ(x)^T B + B ρ(x) = 0
  for (const auto& x : m.action)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<std::pair<int, Q>> e;
        for (int k = 0; k < d; ++k) {
          if (x(k, i) != 0) e.push_back({k * d + j, x(k, i)});
          if (x(k, j) != 0) e.push_back({i * d + k, x(k, j)});
        }
        if (!e.empty()) eqs.push_back(std::move(e));
      }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      if (i == j && symmetry > 0) continue;
      if (i == j) eqs.push_back({{i * d + i, Q(1)}});
      else eqs.push_back({{i * d + j, Q(1)}, {j * d + i, Q(-symmetry)}});
    }
  QMatrix a(static_cast<int>(eqs.size()), nunk);
  for (size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [c, v] : eqs[r]) a(static_cast<int>(r), c) += v;
  std::vector<QMatrix> out;
  for (const auto& v : nullspace(a)) {
    QMatrix b(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) b(i, j) = v[i * d + j];
    out.push_back(b);
  }
  return out;
}

bool check_representation(const ModuleRep& m) {
  const auto& g = *m.g;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      QMatrix lhs = commutator(m.action[a], m.action[b]);
      QMatrix rhs(m.dim, m.dim);
      for (int c = 0; c < g.dim(); ++c)
        if (g.structure[a][b][c] != 0) rhs = rhs + m.action[c] * g.structure[a][b][c];
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_form_invariant(const ModuleRep& m) {
  if (!m.has_form) return false;
  for (const auto& x : m.action)
    if (!(x.transpose() * m.form + m.form * x).is_zero()) return false;
  return true;
}

namespace {

std::vector<std::string> default_names(const ModuleRep& m, Parity p) {
  std::string base = p == Parity::Odd ? "ξ" : "v";
  std::vector<std::string> names;
  const auto& g = *m.g;
  bool sl2 = g.family == Family::SL && g.n == 2;
  if (sl2 && (m.kind == ModuleKind::Vector || m.kind == ModuleKind::Adjoint)) {
    for (int i = 0; i < m.dim; ++i) {
      int w = m.weights[i][0] / 2;
      names.push_back(base + std::to_string(w));
    }
    return names;
  }
  // V ⊕ V*: paper style v1.. and v1*..
  if (m.kind == ModuleKind::DirectSum && m.block_offsets.size() == 2 && m.dim % 2 == 0 &&
      m.label.find("dual") != std::string::npos) {
    int h = m.dim / 2;
    for (int i = 0; i < h; ++i) names.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < h; ++i) names.push_back("v" + std::to_string(i + 1) + "*");
    return names;
  }
  for (int i = 0; i < m.dim; ++i) names.push_back(base + std::to_string(i + 1));
  return names;
}

bool is_pairing_sum(const ModuleRep& m) {
  return m.kind == ModuleKind::DirectSum && m.block_offsets.size() == 2 && m.dim % 2 == 0 &&
         m.block_offsets[1] == m.dim / 2 && m.label.size() > 4 &&
         m.label.substr(m.label.size() - 4) == "dual";
}

}  // namespace

ModulePtr with_parity(const ModulePtr& src, Parity p, bool require_form) {
  auto m = std::make_shared<ModuleRep>(*src);
  m->parity = p;
  m->coord_names = default_names(*m, p);
  int symmetry = p == Parity::Odd ? 1 : -1;
  if (m->kind == ModuleKind::Adjoint) {
    if (symmetry > 0) {
      m->form = m->g->form;
      m->has_form = true;
    }
  } else if (is_pairing_sum(*m)) {
    int h = m->dim / 2;
    m->form = QMatrix(m->dim, m->dim);
    for (int i = 0; i < h; ++i) {
      m->form(i, h + i) = 1;
      m->form(h + i, i) = symmetry;
    }
    m->has_form = true;
  } else {
    auto forms = invariant_forms(*m, symmetry);
    if (forms.size() == 1) {
      QMatrix b = forms[0];
      Q lead = 0;
      for (int i = 0; i < m->dim && lead == 0; ++i)
        for (int j = 0; j < m->dim && lead == 0; ++j)
          if (b(i, j) != 0) lead = b(i, j);
      m->form = b * (1 / lead);
      m->has_form = true;
    } else if (forms.size() > 1 && require_form) {
      throw AlgebraError("invariant form on " + m->label + " is not unique");
    }
  }
  if (require_form && !m->has_form)
    throw AlgebraError(std::string("module ") + m->label + " has no invariant " +
                       (symmetry > 0 ? "symmetric" : "skew") + " form");
  if (m->has_form && !check_form_invariant(*m)) throw AlgebraError("attached form is not invariant");
  return m;
}

ModulePtr parse_module_expr(const AlgebraPtr& g, const std::string& expr) {
  // split on top-level '+'
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : expr) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0 && !(cur.size() >= 6 && cur.substr(cur.size() - 6) == "spinor")) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (depth != 0) throw AlgebraError("unbalanced parentheses in module expression '" + expr + "'");
  std::vector<ModulePtr> mods;
  static const std::regex fn(R"((wedge|sym|dual)(\d*)\((.*)\))");
  for (const auto& p : parts) {
    std::smatch m;
    if (p.empty()) throw AlgebraError("empty module term in '" + expr + "'");
    if (std::regex_match(p, m, fn)) {
      auto inner = parse_module_expr(g, m[3]);
      std::string op = m[1];
      if (op == "dual") {
        mods.push_back(dual_module(inner));
      } else {
        if (m[2].str().empty()) throw AlgebraError("missing power in '" + p + "'");
        int k = std::stoi(m[2]);
        if (k < 0 || k > 12) throw AlgebraError("power out of range in '" + p + "'");
        mods.push_back(op == "wedge" ? wedge_module(inner, k) : sym_module(inner, k));
      }
    } else if (p == "v1" || p == "vector") {
      mods.push_back(vector_module(g));
    } else if (p == "v1dual") {
      mods.push_back(dual_module(vector_module(g)));
    } else if (p == "adjoint") {
      mods.push_back(adjoint_module(g));
    } else if (p == "trivial") {
      mods.push_back(trivial_module(g));
    } else if (p == "spinor+" || p == "v3") {
      mods.push_back(spinor_module(g, true));
    } else if (p == "spinor-" || p == "v4") {
      mods.push_back(spinor_module(g, false));
    } else if (std::regex_match(p, m, std::regex(R"(v(\d))"))) {
      // fundamental ϖ_k realized as ⋀^k of the vector module (sl only)
      int k = std::stoi(m[1]);
      if (g->family != Family::SL || k < 1 || k >= g->n) throw AlgebraError("unsupported module " + p + " for " + g->label);
      mods.push_back(wedge_module(vector_module(g), k));
    } else {
      throw AlgebraError("unknown module '" + p + "'");
    }
  }
  return mods.size() == 1 ? mods[0] : direct_sum(mods);
}

ModuleSpec parse_module_spec(const std::string& spec) {
  auto c1 = spec.find(':');
  auto c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) throw AlgebraError("module spec needs algebra:module:parity, got '" + spec + "'");
  auto g = parse_algebra(spec.substr(0, c1));
  std::string par = spec.substr(c2 + 1);
  Parity p;
  if (par == "odd") p = Parity::Odd;
  else if (par == "even") p = Parity::Even;
  else throw AlgebraError("parity must be odd or even, got '" + par + "'");
  auto m = parse_module_expr(g, spec.substr(c1 + 1, c2 - c1 - 1));
  return {g, with_parity(m, p)};
}

const std::vector<std::string>& listed_pairs() {
  static const std::vector<std::string> pairs = {
      "sl(2):v1:even",   "sl(2):adjoint:odd", "sp(4):v1:even",      "sp(6):v1:even",
      "so(5):v1:odd",    "so(6):v1:odd",      "so(7):v1:odd",       "so(8):v1:odd",
      "sl(4):wedge2(v1):odd", "so(8):spinor+:odd", "so(8):spinor-:odd",
  };
  return pairs;
}

int predicted_exp_degree(const ModuleRep& rep) {
  const auto& g = *rep.g;
  if (rep.kind == ModuleKind::Spinor && g.family == Family::SO && g.n == 8) return 4;
  if (g.family == Family::SL && g.n == 4 && rep.kind == ModuleKind::Wedge && rep.dim == 6) return 2;
  if (g.family == Family::SO && g.n == 6 && rep.kind == ModuleKind::Vector) return 2;
  if (g.family == Family::SL && g.n == 2 && (rep.kind == ModuleKind::Vector || rep.kind == ModuleKind::Adjoint))
    return 1;
  if (g.family == Family::SP && rep.kind == ModuleKind::Vector) return 1;
  if (g.family == Family::SO && rep.kind == ModuleKind::Vector && g.n != 6) return 1;
  return -1;
}

int predicted_nilpotency(const ModuleRep& rep) {
  const auto& g = *rep.g;
  if (g.family == Family::SL && g.n == 2 && rep.kind == ModuleKind::Vector) return 3;
  if (g.family == Family::SL && g.n == 2 && rep.kind == ModuleKind::Adjoint) return 2;
  if (g.family == Family::SL && g.n == 4 && rep.kind == ModuleKind::Wedge && rep.dim == 6) return 4;
  if (g.family == Family::SO && g.n == 8 && (rep.kind == ModuleKind::Spinor || rep.kind == ModuleKind::Vector))
    return 5;
  if (g.family == Family::SO && rep.kind == ModuleKind::Vector) return 3;
  if (g.family == Family::SP && rep.kind == ModuleKind::Vector) return 3;
  return -1;
}

SpacePtr phase_space(const ModuleRep& m) {
  return make_space(m.coord_names, std::vector<Parity>(m.dim, m.parity));
}

MultiVector partial_vector_field(const ModuleRep& m, const SpacePtr& s, int a, int begin, int end) {
  std::vector<SuperPoly> comps(m.dim, s->zero());
  const QMatrix& r = m.action[a];
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < m.dim; ++j)
      if (r(j, i) != 0) comps[i] += s->x(j) * r(j, i);
  return MultiVector::vector_field(s, comps);
}

MultiVector generating_vector_field(const ModuleRep& m, const SpacePtr& s, int a) {
  return partial_vector_field(m, s, a, 0, m.dim);
}

MultiVector generating_vector_field(const ModuleRep& m, const SpacePtr& s, const QVec& x) {
  MultiVector r = MultiVector::zero(s);
  for (int a = 0; a < m.g->dim(); ++a)
    if (x[a] != 0) r += generating_vector_field(m, s, a) * x[a];
  return r;
}

std::vector<MultiVector> basis_lifts(const ModuleRep& m, const SpacePtr& s) {
  std::vector<MultiVector> out;
  for (int a = 0; a < m.g->dim(); ++a) out.push_back(generating_vector_field(m, s, a));
  return out;
}

}  // namespace qm
