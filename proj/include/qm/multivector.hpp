#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qm/superpoly.hpp"

namespace qm {

// Polynomial multivector fields realized as functions on the shifted
// cotangent bundle: coordinates x_i and momenta θ_i = ∂_i of opposite parity.
// Generator i < dim is x_i, generator dim + i is ∂_i.
class PhaseSpace {
 public:
  PhaseSpace(const std::vector<std::string>& coords, const std::vector<Parity>& parities,
             const std::string& prefix = "∂");

  int dim() const { return dim_; }
  const TablePtr& table() const { return table_; }
  bool coord_odd(int i) const { return table_->odd(i); }
  const std::string& coord_name(int i) const { return table_->name(i); }
  uint64_t coord_mask() const { return coord_mask_; }
  uint64_t momentum_mask() const { return momentum_mask_; }

  SuperPoly x(int i) const { return SuperPoly::gen(table_, i); }
  SuperPoly theta(int i) const { return SuperPoly::gen(table_, dim_ + i); }
  SuperPoly zero() const { return SuperPoly(table_); }
  SuperPoly one() const { return SuperPoly::constant(table_, 1); }

 private:
  int dim_;
  TablePtr table_;
  uint64_t coord_mask_ = 0, momentum_mask_ = 0;
};

using SpacePtr = std::shared_ptr<const PhaseSpace>;

SpacePtr make_space(const std::vector<std::string>& coords, const std::vector<Parity>& parities,
                    const std::string& prefix = "∂");

class MultiVector {
 public:
  MultiVector() = default;
  MultiVector(SpacePtr s, SuperPoly p);
  static MultiVector zero(SpacePtr s);
  static MultiVector function(SpacePtr s, SuperPoly f);
  static MultiVector derivation(SpacePtr s, int i);
  // Σ comps[i] ∂_i
  static MultiVector vector_field(SpacePtr s, const std::vector<SuperPoly>& comps);
  static MultiVector parse(SpacePtr s, const std::string& text);

  const SpacePtr& space() const { return space_; }
  const SuperPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(const Q& c);
  MultiVector operator-() const { return {space_, -p_}; }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const Q& c) { return a *= c; }
  friend MultiVector operator*(const Q& c, MultiVector a) { return a *= c; }
  friend bool operator==(const MultiVector& a, const MultiVector& b) { return a.p_ == b.p_; }
  friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a.p_ == b.p_); }

  // -1 if inhomogeneous or zero
  int form_degree() const;
  // total parity in the shifted picture; -1 if inhomogeneous
  int parity() const { return p_.parity(); }
  // components: coefficient of ∂_i for a vector field
  std::vector<SuperPoly> components() const;
  std::string str() const { return p_.str(); }

 private:
  SpacePtr space_;
  SuperPoly p_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
MultiVector schouten(const MultiVector& a, const MultiVector& b);
MultiVector bigrade_component(const MultiVector& a, int i, int j);
std::vector<std::pair<int, int>> bigrades(const MultiVector& a);

// {f, g} for the bivector π
SuperPoly apply_bivector(const MultiVector& pi, const SuperPoly& f, const SuperPoly& g);
// X(f)
SuperPoly apply_vector_field(const MultiVector& x, const SuperPoly& f);
// π♯(Σ α_i dx_i) with α_i the right-derivative coefficients of the 1-form
MultiVector sharp(const MultiVector& pi, const std::vector<SuperPoly>& alpha);
// π♯(df)
MultiVector hamiltonian_field(const MultiVector& pi, const SuperPoly& f);
// trivector evaluated on three functions, matching the Jacobiator of apply_bivector
SuperPoly apply_trivector(const MultiVector& p, const SuperPoly& f, const SuperPoly& g, const SuperPoly& h);

}  // namespace qm
