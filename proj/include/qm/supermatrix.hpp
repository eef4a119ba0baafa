#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qm/linalg.hpp"
#include "qm/superpoly.hpp"

namespace qm {

// Square matrix over the supercommutative polynomials. A non-negative
// truncation drops every product term of total degree above it.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(TablePtr t, int n, int truncation = -1);
  static SuperMatrix identity(TablePtr t, int n, int truncation = -1);
  static SuperMatrix from(const TablePtr& t, const QMatrix& m, int truncation = -1);

  int size() const { return n_; }
  int truncation() const { return trunc_; }
  void set_truncation(int t);
  const TablePtr& table() const { return table_; }
  SuperPoly& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const SuperPoly& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator*(const Q& s) const;
  SuperMatrix scaled(const SuperPoly& s) const;
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

  QMatrix body() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  SuperPoly trace() const;
  SuperMatrix truncated(int max_degree) const;
  SuperMatrix map(const std::function<SuperPoly(const SuperPoly&)>& f) const;
  std::string str() const;

 private:
  TablePtr table_;
  int n_ = 0;
  int trunc_ = -1;
  std::vector<SuperPoly> e_;
};

// inverse of a scalar with invertible body
SuperPoly super_inverse(const SuperPoly& a, int truncation = -1);
SuperMatrix super_inverse(const SuperMatrix& a);
// exact square root: body must be a positive rational square
SuperPoly super_sqrt(const SuperPoly& a, int truncation = -1);
SuperPoly super_inverse_sqrt(const SuperPoly& a, int truncation = -1);
// exp(M) for M with nilpotent or truncated powers; reports the highest nonzero power used
SuperMatrix super_exp(const SuperMatrix& m, int* last_power = nullptr);

}  // namespace qm
