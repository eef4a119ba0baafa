#pragma once

#include <vector>

#include "qm/superpoly.hpp"

namespace qm {

using QVec = std::vector<Q>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
  static QMatrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Q& s) const;
  QMatrix operator-() const { return *this * Q(-1); }
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix transpose() const;
  Q trace() const;
  bool is_zero() const;
  QVec apply(const QVec& v) const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);
// throws AlgebraError when singular
QMatrix inverse(const QMatrix& a);
int rank(QMatrix a);
// basis of {x : a x = 0}
std::vector<QVec> nullspace(QMatrix a);

}  // namespace qm
