#include "qm/supermatrix.hpp"

#include <sstream>

namespace qm {

SuperMatrix::SuperMatrix(TablePtr t, int n, int truncation)
    : table_(std::move(t)), n_(n), trunc_(truncation), e_(static_cast<size_t>(n) * n, SuperPoly(table_)) {}

SuperMatrix SuperMatrix::identity(TablePtr t, int n, int truncation) {
  SuperMatrix m(t, n, truncation);
  for (int i = 0; i < n; ++i) m(i, i) = SuperPoly::constant(t, 1);
  return m;
}

SuperMatrix SuperMatrix::from(const TablePtr& t, const QMatrix& q, int truncation) {
  SuperMatrix m(t, q.rows(), truncation);
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m(i, j) = SuperPoly::constant(t, q(i, j));
  return m;
}

void SuperMatrix::set_truncation(int t) {
  trunc_ = t;
  if (t >= 0)
    for (auto& x : e_) x = x.truncated(t);
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (n_ != o.n_) throw AlgebraError("supermatrix size mismatch");
  int tr = trunc_ >= 0 ? (o.trunc_ >= 0 ? std::min(trunc_, o.trunc_) : trunc_) : o.trunc_;
  SuperMatrix m(table_, n_, tr);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const auto& b = o(k, j);
        if (!b.is_zero()) m(i, j) += SuperPoly::multiply(a, b, tr);
      }
    }
  return m;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  SuperMatrix m = *this;
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  SuperMatrix m = *this;
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

SuperMatrix SuperMatrix::operator*(const Q& s) const {
  SuperMatrix m = *this;
  for (auto& x : m.e_) x *= s;
  return m;
}

SuperMatrix SuperMatrix::scaled(const SuperPoly& s) const {
  SuperMatrix m = *this;
  for (auto& x : m.e_) x = SuperPoly::multiply(s, x, trunc_);
  return m;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

QMatrix SuperMatrix::body() const {
  QMatrix q(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q(i, j) = (*this)(i, j).body();
  return q;
}

bool SuperMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool SuperMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool SuperMatrix::is_lower_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

SuperPoly SuperMatrix::trace() const {
  SuperPoly t(table_);
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SuperMatrix SuperMatrix::truncated(int max_degree) const {
  SuperMatrix m = *this;
  for (auto& x : m.e_) x = x.truncated(max_degree);
  return m;
}

SuperMatrix SuperMatrix::map(const std::function<SuperPoly(const SuperPoly&)>& f) const {
  SuperMatrix m = *this;
  for (auto& x : m.e_) x = f(x);
  return m;
}

std::string SuperMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

constexpr int kMaxSeries = 256;

}  // namespace

SuperPoly super_inverse(const SuperPoly& a, int truncation) {
  Q b = a.body();
  if (b == 0) throw AlgebraError("inverse: body is not invertible");
  const auto& t = a.table();
  SuperPoly u = a * Q(1 / b);
  u -= SuperPoly::constant(t, 1);  // a = b(1 + u)
  SuperPoly acc = SuperPoly::constant(t, 1), term = acc;
  for (int k = 1;; ++k) {
    term = SuperPoly::multiply(term, -u, truncation);
    if (term.is_zero()) break;
    if (k > kMaxSeries) throw AlgebraError("inverse series does not terminate; set a truncation order");
    acc += term;
  }
  return acc * Q(1 / b);
}

SuperMatrix super_inverse(const SuperMatrix& a) {
  int n = a.size();
  QMatrix di = inverse(a.body());
  SuperMatrix dm = SuperMatrix::from(a.table(), di, a.truncation());
  SuperMatrix nil = a - SuperMatrix::from(a.table(), a.body(), a.truncation());
  SuperMatrix x = (dm * nil) * Q(-1);
  SuperMatrix acc = SuperMatrix::identity(a.table(), n, a.truncation()), term = acc;
  for (int k = 1;; ++k) {
    term = term * x;
    if (term.is_zero()) break;
    if (k > kMaxSeries) throw AlgebraError("inverse series does not terminate; set a truncation order");
    acc = acc + term;
  }
  return acc * dm;
}

namespace {

Q rational_sqrt(const Q& b) {
  if (b <= 0) throw AlgebraError("square root of a non-positive body");
  mpz_class n = b.get_num(), d = b.get_den(), rn, rd;
  rn = sqrt(n);
  rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) throw AlgebraError("square root: body is not a rational square");
  return Q(rn, rd);
}

SuperPoly binomial_series(const SuperPoly& a, const Q& p, int truncation) {
  Q b = a.body();
  Q sb = rational_sqrt(b);
  const auto& t = a.table();
  SuperPoly u = a * Q(1 / b);
  u -= SuperPoly::constant(t, 1);
  SuperPoly acc = SuperPoly::constant(t, 1), term = acc;
  Q c = 1;
  for (int k = 1;; ++k) {
    c = c * (p - (k - 1)) / k;
    term = SuperPoly::multiply(term, u, truncation);
    if (term.is_zero()) break;
    if (k > kMaxSeries) throw AlgebraError("binomial series does not terminate; set a truncation order");
    acc += term * c;
  }
  return acc * (p > 0 ? sb : Q(1 / sb));
}

}  // namespace

SuperPoly super_sqrt(const SuperPoly& a, int truncation) { return binomial_series(a, Q(1, 2), truncation); }
SuperPoly super_inverse_sqrt(const SuperPoly& a, int truncation) { return binomial_series(a, Q(-1, 2), truncation); }

SuperMatrix super_exp(const SuperMatrix& m, int* last_power) {
  SuperMatrix acc = SuperMatrix::identity(m.table(), m.size(), m.truncation()), term = acc;
  int last = 0;
  for (int k = 1;; ++k) {
    term = (term * m) * Q(1, k);
    if (term.is_zero()) break;
    if (k > kMaxSeries) throw AlgebraError("exponential series does not terminate; set a truncation order");
    last = k;
    acc = acc + term;
  }
  if (last_power) *last_power = last;
  return acc;
}

}  // namespace qm
