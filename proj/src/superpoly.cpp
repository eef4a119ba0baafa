#include "qm/superpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace qm {

GeneratorTable::GeneratorTable(std::vector<Gen> gens) : gens_(std::move(gens)) {
  if (gens_.size() > static_cast<size_t>(kMaxGenerators))
    throw AlgebraError("too many generators: " + std::to_string(gens_.size()));
  for (int i = 0; i < size(); ++i) {
    if (!by_name_.emplace(gens_[i].name, i).second)
      throw AlgebraError("duplicate generator name " + gens_[i].name);
    if (gens_[i].parity == Parity::Odd) odd_mask_ |= uint64_t{1} << i;
  }
}

int GeneratorTable::index(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw AlgebraError("unknown generator " + name);
  return it->second;
}

int GeneratorTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

bool GeneratorTable::same(const GeneratorTable& o) const {
  if (this == &o) return true;
  if (o.gens_.size() != gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != o.gens_[i].name || gens_[i].parity != o.gens_[i].parity) return false;
  return true;
}

TablePtr make_table(const std::vector<std::string>& names, const std::vector<Parity>& parities) {
  if (names.size() != parities.size()) throw AlgebraError("names/parities length mismatch");
  std::vector<GeneratorTable::Gen> g;
  for (size_t i = 0; i < names.size(); ++i) g.push_back({names[i], parities[i], false});
  return std::make_shared<const GeneratorTable>(std::move(g));
}

int Mono::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

int Mono::degree_in(uint64_t mask) const {
  int d = 0;
  while (mask) {
    int i = __builtin_ctzll(mask);
    d += e[i];
    mask &= mask - 1;
  }
  return d;
}

bool Mono::operator<(const Mono& o) const { return std::memcmp(e.data(), o.e.data(), kMaxGenerators) < 0; }
bool Mono::operator==(const Mono& o) const { return std::memcmp(e.data(), o.e.data(), kMaxGenerators) == 0; }

int mono_mul_sign(const Mono& a, const Mono& b) {
  if (a.odd & b.odd) return 0;
  // moving each odd factor of b leftwards past the odd factors of a with larger index
  int swaps = 0;
  uint64_t bo = b.odd;
  while (bo) {
    int j = __builtin_ctzll(bo);
    bo &= bo - 1;
    uint64_t above = j >= 63 ? 0 : (a.odd >> (j + 1));
    swaps += __builtin_popcountll(above);
  }
  return (swaps & 1) ? -1 : 1;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxGenerators; ++i) m.e[i] = static_cast<uint8_t>(a.e[i] + b.e[i]);
  m.odd = a.odd | b.odd;
  return m;
}

SuperPoly SuperPoly::constant(TablePtr t, const Q& c) {
  SuperPoly p(std::move(t));
  p.add_term(Mono{}, c);
  return p;
}

SuperPoly SuperPoly::gen(TablePtr t, int i) {
  if (i < 0 || i >= t->size()) throw AlgebraError("generator index out of range");
  Mono m;
  m.e[i] = 1;
  if (t->odd(i)) m.odd = uint64_t{1} << i;
  SuperPoly p(std::move(t));
  p.add_term(m, 1);
  return p;
}

SuperPoly SuperPoly::gen(TablePtr t, const std::string& name) {
  int i = t->index(name);
  return gen(std::move(t), i);
}

void SuperPoly::add_term(const Mono& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperPoly::check_table(const SuperPoly& o) const {
  if (table_ && o.table_ && table_ != o.table_ && !table_->same(*o.table_))
    throw AlgebraError("generator table mismatch");
}

void SuperPoly::adopt(const SuperPoly& o) {
  check_table(o);
  if (!table_) table_ = o.table_;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  a.check_table(b);
  return a.terms_ == b.terms_;
}

SuperPoly SuperPoly::multiply(const SuperPoly& a, const SuperPoly& b, int max_degree) {
  a.check_table(b);
  SuperPoly r(a.table_ ? a.table_ : b.table_);
  Q tmp;
  for (const auto& [ma, ca] : a.terms_) {
    int da = max_degree >= 0 ? ma.degree() : 0;
    if (max_degree >= 0 && da > max_degree) continue;
    for (const auto& [mb, cb] : b.terms_) {
      int s = mono_mul_sign(ma, mb);
      if (s == 0) continue;
      if (max_degree >= 0 && da + mb.degree() > max_degree) continue;
      tmp = ca * cb;
      if (s < 0) tmp = -tmp;
      r.add_term(mono_mul(ma, mb), tmp);
    }
  }
  return r;
}

Q SuperPoly::body() const { return coeff(Mono{}); }

Q SuperPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

int SuperPoly::parity() const {
  int p = -1;
  for (const auto& [m, c] : terms_) {
    int q = __builtin_popcountll(m.odd) & 1;
    if (p == -1) p = q;
    else if (p != q) return -1;
  }
  return p;
}

SuperPoly SuperPoly::even_part() const {
  SuperPoly r(table_);
  for (const auto& [m, c] : terms_)
    if (!(__builtin_popcountll(m.odd) & 1)) r.terms_.emplace(m, c);
  return r;
}

SuperPoly SuperPoly::odd_part() const {
  SuperPoly r(table_);
  for (const auto& [m, c] : terms_)
    if (__builtin_popcountll(m.odd) & 1) r.terms_.emplace(m, c);
  return r;
}

int SuperPoly::homogeneous_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = m.degree();
    if (d == -1) d = k;
    else if (d != k) return -1;
  }
  return d;
}

SuperPoly SuperPoly::degree_part(int d) const {
  SuperPoly r(table_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

SuperPoly SuperPoly::truncated(int max_degree) const {
  SuperPoly r(table_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= max_degree) r.terms_.emplace(m, c);
  return r;
}

int SuperPoly::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

SuperPoly SuperPoly::lder(int i) const {
  if (!table_ || i < 0 || i >= table_->size()) throw AlgebraError("unknown generator in derivative");
  SuperPoly r(table_);
  bool odd = table_->odd(i);
  uint64_t below = (uint64_t{1} << i) - 1;
  for (const auto& [m, c] : terms_) {
    if (!m.e[i]) continue;
    Mono n = m;
    n.e[i]--;
    if (odd) {
      n.odd &= ~(uint64_t{1} << i);
      int s = __builtin_popcountll(m.odd & below) & 1;
      r.add_term(n, s ? Q(-c) : c);
    } else {
      r.add_term(n, c * m.e[i]);
    }
  }
  return r;
}

SuperPoly SuperPoly::rder(int i) const {
  if (!table_ || i < 0 || i >= table_->size()) throw AlgebraError("unknown generator in derivative");
  SuperPoly r(table_);
  bool odd = table_->odd(i);
  uint64_t above = i >= 63 ? 0 : ~((uint64_t{2} << i) - 1);
  for (const auto& [m, c] : terms_) {
    if (!m.e[i]) continue;
    Mono n = m;
    n.e[i]--;
    if (odd) {
      n.odd &= ~(uint64_t{1} << i);
      int s = __builtin_popcountll(m.odd & above) & 1;
      r.add_term(n, s ? Q(-c) : c);
    } else {
      r.add_term(n, c * m.e[i]);
    }
  }
  return r;
}

SuperPoly SuperPoly::substitute(const std::map<int, SuperPoly>& images) const {
  for (const auto& [i, img] : images) {
    if (i < 0 || i >= table_->size()) throw AlgebraError("substitution of unknown generator");
    check_table(img);
    int p = img.parity();
    if (!img.is_zero() && p != (table_->odd(i) ? 1 : 0))
      throw AlgebraError("substitution parity mismatch for " + table_->name(i));
  }
  SuperPoly r(table_);
  // powers of images are cached per generator
  std::map<std::pair<int, int>, SuperPoly> powers;
  auto power = [&](int i, int k) -> const SuperPoly& {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = images.find(i);
    SuperPoly base = img == images.end() ? gen(table_, i) : img->second;
    SuperPoly acc = constant(table_, 1);
    for (int j = 0; j < k; ++j) acc = acc * base;
    return powers.emplace(key, std::move(acc)).first->second;
  };
  for (const auto& [m, c] : terms_) {
    SuperPoly t = constant(table_, c);
    for (int i = 0; i < table_->size() && !t.is_zero(); ++i)
      if (m.e[i]) t = t * power(i, m.e[i]);
    r += t;
  }
  return r;
}

SuperPoly SuperPoly::reindexed(TablePtr target, const std::vector<int>& index_map) const {
  SuperPoly r(target);
  for (const auto& [m, c] : terms_) {
    // rebuild in source order so the sign comes out of the product
    SuperPoly t = constant(target, c);
    for (int i = 0; i < table_->size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) t = t * gen(target, index_map.at(i));
    r += t;
  }
  return r;
}

std::string render_rational(const Q& q) { return q.get_str(); }

namespace {

std::string render_mono(const GeneratorTable& t, const Mono& m) {
  std::string plain, wedge;
  for (int i = 0; i < t.size(); ++i) {
    if (!m.e[i]) continue;
    const auto& g = t.gen(i);
    if (g.wedge) {
      for (int k = 0; k < m.e[i]; ++k) {
        if (!wedge.empty()) wedge += "∧";
        wedge += g.name;
      }
    } else {
      plain += g.name;
      if (m.e[i] > 1) plain += "^" + std::to_string(m.e[i]);
    }
  }
  if (!plain.empty() && !wedge.empty()) return plain + " " + wedge;
  return plain + wedge;
}

}  // namespace

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = render_mono(*table_, m);
    Q a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << (a.get_den() != 1 || std::isdigit(static_cast<unsigned char>(mono[0])) ? " " : "");
      os << mono;
    }
  }
  return os.str();
}

}  // namespace qm
