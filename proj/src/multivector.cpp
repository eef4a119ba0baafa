#include "qm/multivector.hpp"

namespace qm {

PhaseSpace::PhaseSpace(const std::vector<std::string>& coords, const std::vector<Parity>& parities,
                       const std::string& prefix)
    : dim_(static_cast<int>(coords.size())) {
  if (coords.size() != parities.size()) throw AlgebraError("coordinate/parity length mismatch");
  if (2 * dim_ > kMaxGenerators) throw AlgebraError("phase space too large");
  std::vector<GeneratorTable::Gen> gens;
  for (int i = 0; i < dim_; ++i) gens.push_back({coords[i], parities[i], false});
  for (int i = 0; i < dim_; ++i) {
    Parity flipped = parities[i] == Parity::Odd ? Parity::Even : Parity::Odd;
    gens.push_back({prefix + coords[i], flipped, true});
  }
  table_ = std::make_shared<const GeneratorTable>(std::move(gens));
  for (int i = 0; i < dim_; ++i) {
    coord_mask_ |= uint64_t{1} << i;
    momentum_mask_ |= uint64_t{1} << (dim_ + i);
  }
}

SpacePtr make_space(const std::vector<std::string>& coords, const std::vector<Parity>& parities,
                    const std::string& prefix) {
  return std::make_shared<const PhaseSpace>(coords, parities, prefix);
}

MultiVector::MultiVector(SpacePtr s, SuperPoly p) : space_(std::move(s)), p_(std::move(p)) {
  if (!p_.table()) p_ = SuperPoly(space_->table());
  else if (!p_.table()->same(*space_->table())) throw AlgebraError("multivector over a foreign table");
}

MultiVector MultiVector::zero(SpacePtr s) {
  auto t = s->table();
  return {std::move(s), SuperPoly(t)};
}

MultiVector MultiVector::function(SpacePtr s, SuperPoly f) {
  for (const auto& [m, c] : f.terms())
    if (m.degree_in(s->momentum_mask())) throw AlgebraError("function contains derivations");
  return {std::move(s), std::move(f)};
}

MultiVector MultiVector::derivation(SpacePtr s, int i) {
  auto th = s->theta(i);
  return {std::move(s), std::move(th)};
}

MultiVector MultiVector::vector_field(SpacePtr s, const std::vector<SuperPoly>& comps) {
  SuperPoly r = s->zero();
  for (size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].is_zero()) r += comps[i] * s->theta(static_cast<int>(i));
  return {std::move(s), std::move(r)};
}

MultiVector MultiVector::parse(SpacePtr s, const std::string& text) {
  auto p = parse_poly(s->table(), text);
  return {std::move(s), std::move(p)};
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  if (!space_) space_ = o.space_;
  p_ += o.p_;
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  if (!space_) space_ = o.space_;
  p_ -= o.p_;
  return *this;
}

MultiVector& MultiVector::operator*=(const Q& c) {
  p_ *= c;
  return *this;
}

int MultiVector::form_degree() const {
  int d = -1;
  for (const auto& [m, c] : p_.terms()) {
    int k = m.degree_in(space_->momentum_mask());
    if (d == -1) d = k;
    else if (d != k) return -1;
  }
  return d;
}

std::vector<SuperPoly> MultiVector::components() const {
  std::vector<SuperPoly> out;
  for (int i = 0; i < space_->dim(); ++i) out.push_back(p_.rder(space_->dim() + i));
  return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  auto s = a.space() ? a.space() : b.space();
  return {s, a.poly() * b.poly()};
}

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
  auto s = a.space() ? a.space() : b.space();
  if (a.space() && b.space() && a.space() != b.space() && !a.space()->table()->same(*b.space()->table()))
    throw AlgebraError("schouten: table mismatch");
  int n = s->dim();
  SuperPoly r = s->zero();
  for (int i = 0; i < n; ++i) {
    auto pt = a.poly().rder(n + i);
    if (!pt.is_zero()) {
      auto qx = b.poly().lder(i);
      if (!qx.is_zero()) r += pt * qx;
    }
    auto px = a.poly().rder(i);
    if (!px.is_zero()) {
      auto qt = b.poly().lder(n + i);
      if (!qt.is_zero()) r -= px * qt;
    }
  }
  return {s, std::move(r)};
}

MultiVector bigrade_component(const MultiVector& a, int i, int j) {
  const auto& s = a.space();
  SuperPoly r(s->table());
  for (const auto& [m, c] : a.poly().terms()) {
    int di = m.degree_in(s->momentum_mask());
    int dj = m.degree_in(s->coord_mask()) - di;
    if (di == i && dj == j) r.add_term(m, c);
  }
  return {s, std::move(r)};
}

std::vector<std::pair<int, int>> bigrades(const MultiVector& a) {
  std::vector<std::pair<int, int>> out;
  const auto& s = a.space();
  for (const auto& [m, c] : a.poly().terms()) {
    int di = m.degree_in(s->momentum_mask());
    std::pair<int, int> g{di, m.degree_in(s->coord_mask()) - di};
    bool seen = false;
    for (auto& o : out) seen = seen || o == g;
    if (!seen) out.push_back(g);
  }
  return out;
}

namespace {

MultiVector as_fn(const MultiVector& like, const SuperPoly& f) { return {like.space(), f}; }

}  // namespace

SuperPoly apply_bivector(const MultiVector& pi, const SuperPoly& f, const SuperPoly& g) {
  int d = pi.form_degree();
  if (d != 2 && !pi.is_zero()) throw AlgebraError("apply_bivector: form degree is not 2");
  auto fe = f.even_part(), fo = f.odd_part();
  SuperPoly r(pi.space()->table());
  if (!fe.is_zero()) r -= schouten(schouten(pi, as_fn(pi, fe)), as_fn(pi, g)).poly();
  if (!fo.is_zero()) r += schouten(schouten(pi, as_fn(pi, fo)), as_fn(pi, g)).poly();
  return r;
}

SuperPoly apply_vector_field(const MultiVector& x, const SuperPoly& f) { return schouten(x, as_fn(x, f)).poly(); }

MultiVector sharp(const MultiVector& pi, const std::vector<SuperPoly>& alpha) {
  const auto& s = pi.space();
  SuperPoly r = s->zero();
  for (int i = 0; i < s->dim() && i < static_cast<int>(alpha.size()); ++i) {
    if (alpha[i].is_zero()) continue;
    auto h = schouten(pi, {s, s->x(i)}).poly();
    if (h.is_zero()) continue;
    r -= alpha[i].even_part() * h;
    r += alpha[i].odd_part() * h;
  }
  return {s, std::move(r)};
}

MultiVector hamiltonian_field(const MultiVector& pi, const SuperPoly& f) { return -schouten(pi, as_fn(pi, f)); }

SuperPoly apply_trivector(const MultiVector& p, const SuperPoly& f, const SuperPoly& g, const SuperPoly& h) {
  // iterated derived bracket; the sign depends on the middle slot only, so that a
  // bivector's Jacobiator is -1/2 of its Schouten square evaluated here
  auto inner = schouten(schouten(p, as_fn(p, f)), as_fn(p, g.even_part())) -
               schouten(schouten(p, as_fn(p, f)), as_fn(p, g.odd_part()));
  return schouten(inner, as_fn(p, h)).poly();
}

}  // namespace qm
