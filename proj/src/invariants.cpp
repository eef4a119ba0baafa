#include "qm/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace qm {

namespace {

using Weight = std::vector<int>;
using SparseVec = std::vector<std::pair<int64_t, Q>>;

int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr int64_t kEnumerationLimit = 4000000;

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight neg(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

// colex rank of a strictly increasing tuple
int64_t rank_subset(const std::vector<int>& c) {
  int64_t r = 0;
  for (size_t p = 0; p < c.size(); ++p) r += binom(c[p], static_cast<int64_t>(p) + 1);
  return r;
}

std::vector<int> unrank_subset(int64_t r, int k) {
  std::vector<int> c(k);
  for (int p = k; p >= 1; --p) {
    int x = p - 1;
    while (binom(x + 1, p) <= r) ++x;
    c[p - 1] = x;
    r -= binom(x, p);
  }
  return c;
}

// Basis enumeration and action of one node, for a fixed algebra.
class Node {
 public:
  virtual ~Node() = default;
  virtual int64_t dim() const = 0;
  virtual Weight weight(int64_t i) const = 0;
  // adds coef · (u_op . e_i)
  virtual void apply(int op, int64_t i, const Q& coef, SparseVec& out) const = 0;
  virtual void enumerate(const Weight& w, std::vector<int64_t>& out) const {
    const auto& cl = classes();
    auto it = cl.find(w);
    if (it != cl.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  const std::map<Weight, std::vector<int64_t>>& classes() const {
    if (!built_) {
      if (dim() > kEnumerationLimit) throw AlgebraError("module too large to enumerate");
      for (int64_t i = 0; i < dim(); ++i) classes_[weight(i)].push_back(i);
      built_ = true;
    }
    return classes_;
  }

 private:
  mutable bool built_ = false;
  mutable std::map<Weight, std::vector<int64_t>> classes_;
};

using NodePtr = std::unique_ptr<Node>;

class LeafNode : public Node {
 public:
  LeafNode(const LieAlgebra& g, const ModuleRep& m) : m_(m) {
    cols_.resize(g.dim());
    for (int a = 0; a < g.dim(); ++a) {
      cols_[a].resize(m.dim);
      for (int i = 0; i < m.dim; ++i)
        for (int k = 0; k < m.dim; ++k)
          if (m.action[a](k, i) != 0) cols_[a][i].emplace_back(k, m.action[a](k, i));
    }
  }
  int64_t dim() const override { return m_.dim; }
  Weight weight(int64_t i) const override { return m_.weights[i]; }
  void apply(int op, int64_t i, const Q& coef, SparseVec& out) const override {
    for (const auto& [k, c] : cols_[op][i]) out.emplace_back(k, coef * c);
  }

 private:
  const ModuleRep& m_;
  std::vector<std::vector<SparseVec>> cols_;
};

class DualNode : public Node {
 public:
  explicit DualNode(NodePtr c) : c_(std::move(c)) {}
  int64_t dim() const override { return c_->dim(); }
  Weight weight(int64_t i) const override { return neg(c_->weight(i)); }
  void apply(int op, int64_t i, const Q& coef, SparseVec& out) const override {
    // −ρᵀ: row i of ρ; found by applying to every basis element of the same weight shifted down
    auto& rows = transpose(op);
    for (const auto& [k, c] : rows[i]) out.emplace_back(k, -coef * c);
  }
  void enumerate(const Weight& w, std::vector<int64_t>& out) const override { c_->enumerate(neg(w), out); }

 private:
  const std::vector<SparseVec>& transpose(int op) const {
    auto it = t_.find(op);
    if (it != t_.end()) return it->second;
    std::vector<SparseVec> rows(c_->dim());
    for (int64_t j = 0; j < c_->dim(); ++j) {
      SparseVec col;
      c_->apply(op, j, Q(1), col);
      for (const auto& [k, c] : col) rows[k].emplace_back(j, c);
    }
    return t_.emplace(op, std::move(rows)).first->second;
  }
  NodePtr c_;
  mutable std::map<int, std::vector<SparseVec>> t_;
};

class TensorNode : public Node {
 public:
  TensorNode(NodePtr a, NodePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  int64_t dim() const override { return a_->dim() * b_->dim(); }
  Weight weight(int64_t i) const override { return add(a_->weight(i / b_->dim()), b_->weight(i % b_->dim())); }
  void apply(int op, int64_t i, const Q& coef, SparseVec& out) const override {
    int64_t db = b_->dim(), ia = i / db, ib = i % db;
    SparseVec t;
    a_->apply(op, ia, coef, t);
    for (const auto& [k, c] : t) out.emplace_back(k * db + ib, c);
    t.clear();
    b_->apply(op, ib, coef, t);
    for (const auto& [k, c] : t) out.emplace_back(ia * db + k, c);
  }
  void enumerate(const Weight& w, std::vector<int64_t>& out) const override {
    std::vector<int64_t> tb;
    for (const auto& [wa, ia] : a_->classes()) {
      tb.clear();
      b_->enumerate(sub(w, wa), tb);
      for (int64_t x : ia)
        for (int64_t y : tb) out.push_back(x * b_->dim() + y);
    }
  }

 private:
  NodePtr a_, b_;
};

// exterior (sign) or symmetric power; symmetric tuples are stored shifted by position
class PowerNode : public Node {
 public:
  PowerNode(NodePtr c, int k, bool exterior) : c_(std::move(c)), k_(k), ext_(exterior) {
    n_ = exterior ? c_->dim() : c_->dim() + k - 1;
  }
  int64_t dim() const override { return binom(n_, k_); }
  Weight weight(int64_t i) const override {
    auto t = tuple(i);
    Weight w = c_->weight(t[0]);
    for (int p = 1; p < k_; ++p) w = add(w, c_->weight(t[p]));
    return w;
  }
  void apply(int op, int64_t i, const Q& coef, SparseVec& out) const override {
    auto t = tuple(i);
    SparseVec img;
    for (int p = 0; p < k_; ++p) {
      img.clear();
      c_->apply(op, t[p], coef, img);
      for (const auto& [j, c] : img) {
        auto u = t;
        u[p] = static_cast<int>(j);
        int sign = 1;
        if (ext_) {
          bool repeat = false;
          for (int q = 0; q < k_; ++q)
            if (q != p && u[q] == u[p]) repeat = true;
          if (repeat) continue;
          for (int q = 0; q < k_; ++q)
            for (int r = q + 1; r < k_; ++r)
              if (u[q] > u[r]) sign = -sign;
        }
        std::sort(u.begin(), u.end());
        out.emplace_back(rank(u), sign > 0 ? c : Q(-c));
      }
    }
  }

 private:
  std::vector<int> tuple(int64_t i) const {
    auto c = unrank_subset(i, k_);
    if (!ext_)
      for (int p = 0; p < k_; ++p) c[p] -= p;
    return c;
  }
  int64_t rank(std::vector<int> u) const {
    if (!ext_)
      for (int p = 0; p < k_; ++p) u[p] += p;
    return rank_subset(u);
  }
  NodePtr c_;
  int k_;
  bool ext_;
  int64_t n_;
};

class SumNode : public Node {
 public:
  explicit SumNode(std::vector<NodePtr> parts) : parts_(std::move(parts)) {
    int64_t o = 0;
    for (auto& p : parts_) {
      off_.push_back(o);
      o += p->dim();
    }
    dim_ = o;
  }
  int64_t dim() const override { return dim_; }
  Weight weight(int64_t i) const override {
    size_t b = block(i);
    return parts_[b]->weight(i - off_[b]);
  }
  void apply(int op, int64_t i, const Q& coef, SparseVec& out) const override {
    size_t b = block(i);
    SparseVec t;
    parts_[b]->apply(op, i - off_[b], coef, t);
    for (const auto& [k, c] : t) out.emplace_back(k + off_[b], c);
  }
  void enumerate(const Weight& w, std::vector<int64_t>& out) const override {
    for (size_t b = 0; b < parts_.size(); ++b) {
      std::vector<int64_t> t;
      parts_[b]->enumerate(w, t);
      for (auto x : t) out.push_back(x + off_[b]);
    }
  }

 private:
  size_t block(int64_t i) const {
    size_t b = 0;
    while (b + 1 < off_.size() && off_[b + 1] <= i) ++b;
    return b;
  }
  std::vector<NodePtr> parts_;
  std::vector<int64_t> off_;
  int64_t dim_ = 0;
};

NodePtr build(const LieAlgebra& g, const TensorModuleExpr& e) {
  using K = TensorModuleExpr::Kind;
  switch (e.kind()) {
    case K::Leaf:
      if (e.module()->g.get() != &g && e.module()->g->label != g.label)
        throw AlgebraError("module " + e.module()->label + " belongs to another algebra");
      return std::make_unique<LeafNode>(g, *e.module());
    case K::Dual:
      return std::make_unique<DualNode>(build(g, *e.children()[0]));
    case K::Tensor:
      return std::make_unique<TensorNode>(build(g, *e.children()[0]), build(g, *e.children()[1]));
    case K::Wedge:
      return std::make_unique<PowerNode>(build(g, *e.children()[0]), e.power(), true);
    case K::Sym:
      return std::make_unique<PowerNode>(build(g, *e.children()[0]), e.power(), false);
    case K::Sum: {
      std::vector<NodePtr> parts;
      for (const auto& c : e.children()) parts.push_back(build(g, *c));
      return std::make_unique<SumNode>(std::move(parts));
    }
  }
  throw AlgebraError("unknown module expression");
}

Weight zero_weight(const LieAlgebra& g) { return Weight(g.cartan.size(), 0); }

// recursive descent over the tensor expression grammar
class ExprParser {
 public:
  ExprParser(const AlgebraPtr& g, const std::string& s) : g_(g), s_(s) {}
  ExprPtr parse() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + " in '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& t) {
    skip();
    if (s_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }
  ExprPtr sum() {
    std::vector<ExprPtr> parts{product()};
    while (eat("+")) parts.push_back(product());
    return parts.size() == 1 ? parts[0] : TensorModuleExpr::sum(parts);
  }
  ExprPtr product() {
    auto e = factor();
    while (eat("⊗") || eat("*")) e = TensorModuleExpr::tensor(e, factor());
    return e;
  }
  int number() {
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a power");
    return std::stoi(s_.substr(b, pos_ - b));
  }
  ExprPtr factor() {
    skip();
    if (eat("(")) {
      auto e = sum();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string id = s_.substr(b, pos_ - b);
    if (id.empty()) fail("expected a module");
    if (id == "spinor" && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) id += s_[pos_++];
    auto wrapped = [&](auto make) {
      if (!eat("(")) fail("expected '('");
      auto e = sum();
      if (!eat(")")) fail("expected ')'");
      return make(e);
    };
    if (id == "dual") return wrapped([](ExprPtr e) { return TensorModuleExpr::dual(e); });
    for (const char* pre : {"wedge", "sym"}) {
      std::string p(pre);
      if (id.size() > p.size() && id.compare(0, p.size(), p) == 0 &&
          std::all_of(id.begin() + p.size(), id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int k = std::stoi(id.substr(p.size()));
        bool ext = p == "wedge";
        return wrapped([k, ext](ExprPtr e) { return ext ? TensorModuleExpr::wedge(e, k) : TensorModuleExpr::sym(e, k); });
      }
    }
    try {
      return TensorModuleExpr::leaf(parse_module_expr(g_, id));
    } catch (const AlgebraError& err) {
      fail(err.what());
    }
  }

  AlgebraPtr g_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

ExprPtr TensorModuleExpr::leaf(ModulePtr m) {
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Leaf;
  e->leaf_ = std::move(m);
  return e;
}

ExprPtr TensorModuleExpr::dual(ExprPtr a) {
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Dual;
  e->children_ = {std::move(a)};
  return e;
}

ExprPtr TensorModuleExpr::tensor(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Tensor;
  e->children_ = {std::move(a), std::move(b)};
  return e;
}

ExprPtr TensorModuleExpr::wedge(ExprPtr a, int k) {
  if (k < 1) throw AlgebraError("exterior power must be positive");
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Wedge;
  e->children_ = {std::move(a)};
  e->k_ = k;
  return e;
}

ExprPtr TensorModuleExpr::sym(ExprPtr a, int k) {
  if (k < 1) throw AlgebraError("symmetric power must be positive");
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Sym;
  e->children_ = {std::move(a)};
  e->k_ = k;
  return e;
}

ExprPtr TensorModuleExpr::sum(std::vector<ExprPtr> parts) {
  if (parts.empty()) throw AlgebraError("empty direct sum");
  auto e = std::make_shared<TensorModuleExpr>();
  e->kind_ = Kind::Sum;
  e->children_ = std::move(parts);
  return e;
}

int64_t TensorModuleExpr::dim() const {
  switch (kind_) {
    case Kind::Leaf:
      return leaf_->dim;
    case Kind::Dual:
      return children_[0]->dim();
    case Kind::Tensor:
      return children_[0]->dim() * children_[1]->dim();
    case Kind::Wedge:
      return binom(children_[0]->dim(), k_);
    case Kind::Sym:
      return binom(children_[0]->dim() + k_ - 1, k_);
    case Kind::Sum: {
      int64_t d = 0;
      for (const auto& c : children_) d += c->dim();
      return d;
    }
  }
  return 0;
}

std::string TensorModuleExpr::str() const {
  switch (kind_) {
    case Kind::Leaf:
      return leaf_->label;
    case Kind::Dual:
      return "dual(" + children_[0]->str() + ")";
    case Kind::Tensor:
      return "(" + children_[0]->str() + ")⊗(" + children_[1]->str() + ")";
    case Kind::Wedge:
      return "wedge" + std::to_string(k_) + "(" + children_[0]->str() + ")";
    case Kind::Sym:
      return "sym" + std::to_string(k_) + "(" + children_[0]->str() + ")";
    case Kind::Sum: {
      std::string s;
      for (const auto& c : children_) s += (s.empty() ? "" : " + ") + c->str();
      return s;
    }
  }
  return "";
}

ExprPtr parse_tensor_expr(const AlgebraPtr& g, const std::string& text) { return ExprParser(g, text).parse(); }

int64_t zero_weight_dimension(const LieAlgebra& g, const ExprPtr& m) {
  if (m->dim() == 0) return 0;
  auto node = build(g, *m);
  std::vector<int64_t> basis;
  node->enumerate(zero_weight(g), basis);
  return static_cast<int64_t>(basis.size());
}

int64_t invariant_dimension(const LieAlgebra& g, const ExprPtr& m, const InvariantOptions& opt) {
  if (m->dim() == 0) return 0;
  auto node = build(g, *m);
  std::vector<int64_t> basis;
  node->enumerate(zero_weight(g), basis);
  int64_t n0 = static_cast<int64_t>(basis.size());
  if (n0 > opt.bound)
    throw AlgebraError("weight-zero subspace of " + m->str() + " has dimension " + std::to_string(n0) +
                       ", above the bound " + std::to_string(opt.bound));
  if (n0 == 0) return 0;
  // rows indexed by (simple operator, target basis element)
  std::vector<SparseRow> rows;
  for (int s : g.simple) {
    std::unordered_map<int64_t, size_t> row_of;
    size_t first = rows.size();
    SparseVec img;
    for (int64_t c = 0; c < n0; ++c) {
      img.clear();
      node->apply(s, basis[c], Q(1), img);
      for (const auto& [t, v] : img) {
        auto [it, fresh] = row_of.emplace(t, rows.size());
        if (fresh) rows.emplace_back();
        auto& row = rows[it->second];
        if (!row.empty() && row.back().first == c) row.back().second += v;
        else row.emplace_back(c, v);
      }
    }
    for (size_t r = first; r < rows.size(); ++r)
      rows[r].erase(std::remove_if(rows[r].begin(), rows[r].end(), [](const auto& p) { return p.second == 0; }),
                    rows[r].end());
  }
  int64_t rk = opt.parallel ? sparse_rank_parallel(rows) : sparse_rank_serial(rows);
  return n0 - rk;
}

int64_t hom_dimension(const LieAlgebra& g, const ExprPtr& a, const ExprPtr& b, const InvariantOptions& opt) {
  return invariant_dimension(g, TensorModuleExpr::tensor(TensorModuleExpr::dual(a), b), opt);
}

int64_t invariant_dimension_reference(const LieAlgebra& g, const ExprPtr& m) {
  int64_t d = m->dim();
  if (d == 0) return 0;
  if (d > 400) throw AlgebraError("reference solver limited to dimension 400");
  auto node = build(g, *m);
  int n = static_cast<int>(d);
  QMatrix stacked(g.dim() * n, n);
  SparseVec img;
  for (int a = 0; a < g.dim(); ++a)
    for (int j = 0; j < n; ++j) {
      img.clear();
      node->apply(a, j, Q(1), img);
      for (const auto& [k, v] : img) stacked(a * n + static_cast<int>(k), j) += v;
    }
  return n - rank(stacked);
}

}  // namespace qm

namespace qm {

namespace {

std::string power_expr(bool even, int k, const std::string& v) {
  return (even ? "sym" : "wedge") + std::to_string(k) + "(" + v + ")";
}

}  // namespace

std::vector<BranchingRow> branching_rows(const std::string& pair, bool parallel) {
  std::vector<BranchingRow> rows;
  InvariantOptions opt;
  opt.parallel = parallel;
  {
    auto spec = parse_module_spec(pair);
    const auto& g = spec.g;
    const auto& rep = *spec.rep;
    bool even = rep.parity == Parity::Even;
    std::string v = pair.substr(pair.find(':') + 1);
    v = v.substr(0, v.rfind(':'));
    std::string f = even ? "S" : "⋀";
    bool so8 = g->family == Family::SO && g->n == 8;
    bool sl4 = g->family == Family::SL && g->n == 4;
    bool case_one = !(sl4 || (g->family == Family::SO && g->n == 6) || (so8 && rep.kind == ModuleKind::Spinor));
    auto add = [&](std::string label, std::string a, std::string b, std::string claim) {
      BranchingRow r{pair, std::move(label), std::move(a), std::move(b), 0, std::move(claim)};
      r.dim = hom_dimension(*g, parse_tensor_expr(g, r.a), parse_tensor_expr(g, r.b), opt);
      rows.push_back(std::move(r));
    };

    add("Hom(⋀³V, S³V)", "wedge3(" + v + ")", "sym3(" + v + ")", "zero");

    if (even) {
      add("Hom(S⁴V, ⋀²V)", "sym4(" + v + ")", "wedge2(" + v + ")", "zero");
    } else {
      add("Hom(⋀⁴V, S²V)", "wedge4(" + v + ")", "sym2(" + v + ")", "zero");
      add("Hom(⋀⁸V, S²V)", "wedge8(" + v + ")", "sym2(" + v + ")", sl4 ? "zero" : so8 ? "nonzero" : "");
    }

    int claimed = predicted_nilpotency(rep);
    for (int k = 3; k <= std::max(claimed, 3); ++k) {
      std::string claim;
      if (k == claimed) claim = "zero";
      if (so8 && rep.kind == ModuleKind::Vector && k == 4) claim = "nonzero";
      add("Hom(g⊗g, F^" + std::to_string(2 * k) + ")", "adjoint*adjoint", power_expr(even, 2 * k, v), claim);
    }
    if (claimed == 2) add("Hom(g⊗g, F^4)", "adjoint*adjoint", power_expr(even, 4, v), "zero");

    int kmax = even ? 3 : rep.dim / 2;
    for (int k = 1; k <= kmax; ++k)
      add("(F^" + std::to_string(2 * k) + "⊗W⊗W*)^g", "trivial", power_expr(even, 2 * k, v) + "*v1*dual(v1)",
          case_one && k > 1 ? "zero" : "");
  }
  return rows;
}

std::vector<BranchingRow> branching_table(bool parallel) {
  std::vector<BranchingRow> rows;
  for (const auto& pair : listed_pairs()) {
    auto part = branching_rows(pair, parallel);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace qm
