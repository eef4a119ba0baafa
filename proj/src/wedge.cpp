#include <algorithm>
#include <sstream>

#include "qm/liealg.hpp"

namespace qm {

Grassmann Grassmann::gen(int ngens, int i) {
  Grassmann g(ngens);
  g.add({i}, 1);
  return g;
}

void Grassmann::add(Key k, const Q& c) {
  if (c == 0) return;
  int sign = 1;
  for (size_t i = 0; i < k.size(); ++i)
    for (size_t j = i + 1; j < k.size(); ++j) {
      if (k[i] == k[j]) return;
      if (k[i] > k[j]) sign = -sign;
    }
  std::sort(k.begin(), k.end());
  auto [it, ins] = terms_.try_emplace(k, sign > 0 ? c : Q(-c));
  if (!ins) {
    it->second += sign > 0 ? c : Q(-c);
    if (it->second == 0) terms_.erase(it);
  }
}

Q Grassmann::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Q(0) : it->second;
}

Grassmann& Grassmann::operator+=(const Grassmann& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Grassmann& Grassmann::operator-=(const Grassmann& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Grassmann& Grassmann::operator*=(const Q& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Grassmann wedge(const Grassmann& a, const Grassmann& b) {
  Grassmann r(std::max(a.n_, b.n_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(std::move(k), ca * cb);
    }
  return r;
}

MultiVector Grassmann::lift(const std::vector<MultiVector>& images) const {
  if (images.empty()) throw AlgebraError("lift without images");
  MultiVector r = MultiVector::zero(images[0].space());
  for (const auto& [k, c] : terms_) {
    MultiVector t = MultiVector::function(images[0].space(), images[0].space()->one()) * c;
    for (int i : k) t = wedge(t, images.at(i));
    r += t;
  }
  return r;
}

std::string Grassmann::str(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Q a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (a != 1 || k.empty()) os << a.get_str() << (k.empty() ? "" : " ");
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "∧" : "") << labels.at(k[i]);
  }
  return os.str();
}

Grassmann ad_action(const LieAlgebra& g, const QVec& x, const Grassmann& w) {
  Grassmann r(w.ngens());
  int d = g.dim();
  for (const auto& [k, c] : w.terms()) {
    for (size_t slot = 0; slot < k.size(); ++slot) {
      int gi = k[slot];
      // generators beyond d belong to further copies of g
      int copy = gi / d, b = gi % d;
      QVec e(d);
      e[b] = 1;
      QVec y = g.bracket(x, e);
      for (int a = 0; a < d; ++a) {
        if (y[a] == 0) continue;
        auto nk = k;
        nk[slot] = copy * d + a;
        r.add(nk, c * y[a]);
      }
    }
  }
  return r;
}

Grassmann cartan_trivector(const LieAlgebra& g) {
  int d = g.dim();
  Grassmann r(d);
  std::vector<QVec> duals;
  for (int a = 0; a < d; ++a) duals.push_back(g.dual(a));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Q v = g.f(a, b, c);
        if (v == 0) continue;
        v /= 12;
        for (int i = 0; i < d; ++i) {
          if (duals[a][i] == 0) continue;
          for (int j = 0; j < d; ++j) {
            if (duals[b][j] == 0) continue;
            for (int k = 0; k < d; ++k)
              if (duals[c][k] != 0) r.add({i, j, k}, v * duals[a][i] * duals[b][j] * duals[c][k]);
          }
        }
      }
  return r;
}

RMatrixData standard_r_matrix(const LieAlgebra& g) {
  int d = g.dim();
  RMatrixData out;
  out.r = QMatrix(d, d);
  // half the inverse Cartan pairing
  int h = static_cast<int>(g.cartan.size());
  QMatrix bh(h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) bh(i, j) = g.form(g.cartan[i], g.cartan[j]);
  QMatrix bhi = inverse(bh);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) out.r(g.cartan[i], g.cartan[j]) += bhi(i, j) / 2;
  for (int p : g.positive) {
    QVec dual = g.dual(p);
    for (int b = 0; b < d; ++b)
      if (dual[b] != 0) out.r(p, b) += dual[b];
  }
  out.t = Grassmann(d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) out.t.add({a, b}, out.r(a, b) - out.r(b, a));
  for (int a = 0; a < d; ++a) {
    QVec e(d);
    e[a] = 1;
    out.cobracket.push_back(ad_action(g, e, out.t));
  }
  return out;
}

std::map<std::vector<int>, Q> drinfeld_tensor(const LieAlgebra& g, const QMatrix& t) {
  int d = g.dim();
  std::map<std::vector<int>, Q> res;
  auto put = [&](int a, int b, int c, const Q& v) {
    if (v == 0) return;
    auto& x = res[{a, b, c}];
    x += v;
  };
  std::vector<std::pair<std::pair<int, int>, Q>> nz;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (t(a, b) != 0) nz.push_back({{a, b}, t(a, b)});
  for (const auto& [ab, c1] : nz)
    for (const auto& [cd, c2] : nz) {
      auto [a, b] = ab;
      auto [c, e] = cd;
      Q w = c1 * c2;
      for (int z = 0; z < d; ++z) {
        put(z, b, e, w * g.structure[a][c][z]);  // [t12, t13]
        put(a, z, e, w * g.structure[b][c][z]);  // [t12, t23]
        put(a, c, z, w * g.structure[b][e][z]);  // [t13, t23]
      }
    }
  for (auto it = res.begin(); it != res.end();) it = it->second == 0 ? res.erase(it) : std::next(it);
  return res;
}

Grassmann tensor_to_wedge(const std::map<std::vector<int>, Q>& t, int n) {
  Grassmann r(n);
  for (const auto& [k, c] : t)
    if (k[0] < k[1] && k[1] < k[2]) r.add(k, c);
  return r;
}

std::map<std::vector<int>, Q> wedge_to_tensor(const Grassmann& w) {
  std::map<std::vector<int>, Q> out;
  for (const auto& [k, c] : w.terms()) {
    auto p = k;
    int sign = 1;
    // enumerate permutations with parity
    std::vector<int> idx(k.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    do {
      int inv = 0;
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
          if (idx[i] > idx[j]) ++inv;
      sign = (inv & 1) ? -1 : 1;
      for (size_t i = 0; i < idx.size(); ++i) p[i] = k[idx[i]];
      out[p] += sign > 0 ? c : Q(-c);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return out;
}

Grassmann drinfeld_bracket(const LieAlgebra& g, const Grassmann& t) {
  int d = g.dim();
  QMatrix tm(d, d);
  for (const auto& [k, c] : t.terms()) {
    if (k.size() != 2) throw AlgebraError("drinfeld bracket needs a 2-tensor");
    tm(k[0], k[1]) += c;
    tm(k[1], k[0]) -= c;
  }
  return tensor_to_wedge(drinfeld_tensor(g, tm), d);
}

Grassmann fusion_psi(const LieAlgebra& g) {
  int d = g.dim();
  Grassmann r(2 * d);
  for (int a = 0; a < d; ++a) {
    QVec du = g.dual(a);
    for (int b = 0; b < d; ++b)
      if (du[b] != 0) r.add({a, d + b}, du[b] / 2);
  }
  return r;
}

}  // namespace qm
