#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qm/linalg.hpp"
#include "qm/multivector.hpp"

namespace qm {

enum class Family { SL, SO, SP, GL };

// Matrix Lie algebra given by its defining representation. Basis order:
// positive root vectors (strictly upper triangular), Cartan, negative root vectors.
struct LieAlgebra {
  Family family;
  int n = 0;  // matrix size of the defining representation
  std::string label;
  std::vector<std::string> basis_labels;
  std::vector<QMatrix> defining;
  QMatrix form;      // B_g(u_a, u_b), trace form of the defining rep
  QMatrix form_inv;  // u^a = Σ_b form_inv(a,b) u_b
  // [u_a, u_b] = Σ_c structure[a][b][c] u_c
  std::vector<std::vector<QVec>> structure;
  std::vector<int> positive, cartan, negative;
  std::vector<int> simple;              // simple raising operators
  std::vector<std::vector<int>> roots;  // weight of each basis element, ×2, in cartan order

  int dim() const { return static_cast<int>(defining.size()); }
  int index(const std::string& label) const;
  QVec bracket(const QVec& x, const QVec& y) const;
  // coordinates of a matrix in the span of the defining basis (via B_g)
  QVec coords_of(const QMatrix& m) const;
  QMatrix matrix_of(const QVec& x) const;
  // f_abc = B_g(u_a, [u_b, u_c])
  Q f(int a, int b, int c) const;
  QVec dual(int a) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

AlgebraPtr build_lie_algebra(Family family, int n);
// "sl(2)", "so(8)", "sp(4)", "gl(2)"
AlgebraPtr parse_algebra(const std::string& spec);

enum class ModuleKind { Vector, Adjoint, Dual, DirectSum, Wedge, Sym, Spinor, Trivial };

struct ModuleRep {
  AlgebraPtr g;
  ModuleKind kind = ModuleKind::Vector;
  std::string label;
  int dim = 0;
  Parity parity = Parity::Even;  // parity of the coordinates on the supermanifold
  std::vector<QMatrix> action;   // ρ(u_a), columns are images of basis vectors
  std::vector<std::vector<int>> weights;  // ×2 per basis vector
  std::vector<std::string> coord_names;
  bool has_form = false;
  QMatrix form;  // B(v_i, v_j)
  // for direct sums: block offsets of the summands
  std::vector<int> block_offsets;
};

using ModulePtr = std::shared_ptr<const ModuleRep>;

ModulePtr vector_module(const AlgebraPtr& g);
ModulePtr adjoint_module(const AlgebraPtr& g);
ModulePtr dual_module(const ModulePtr& m);
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);
ModulePtr wedge_module(const ModulePtr& m, int k);
ModulePtr sym_module(const ModulePtr& m, int k);
ModulePtr spinor_module(const AlgebraPtr& g, bool even_half);
ModulePtr trivial_module(const AlgebraPtr& g);

// assign parity, coordinate names and (if possible) the invariant form of the
// symmetry required by the parity; throws when no such form exists
ModulePtr with_parity(const ModulePtr& m, Parity p, bool require_form = true);

// "sl(2):adjoint:odd", "so(8):spinor+:odd", "sl(3):v1+v1dual:odd",
// "sl(4):wedge2(v1):odd", "sp(4):v1:even"
struct ModuleSpec {
  AlgebraPtr g;
  ModulePtr rep;
};
ModuleSpec parse_module_spec(const std::string& spec);
// the classified (g, V) pairs at desk ranks, as module specs
const std::vector<std::string>& listed_pairs();
// degree of exp∘μ and index k with ad_μ^k = 0 stated for the classified pairs, -1 when unknown
int predicted_exp_degree(const ModuleRep& rep);
int predicted_nilpotency(const ModuleRep& rep);
// module expression without algebra/parity, e.g. "wedge3(v1)"
ModulePtr parse_module_expr(const AlgebraPtr& g, const std::string& expr);

// invariant bilinear forms of the given symmetry (+1 symmetric, -1 skew)
std::vector<QMatrix> invariant_forms(const ModuleRep& m, int symmetry);
bool check_representation(const ModuleRep& m);
bool check_form_invariant(const ModuleRep& m);

SpacePtr phase_space(const ModuleRep& m);
// x_V = Σ_i (x.ξ_i) ∂_i
MultiVector generating_vector_field(const ModuleRep& m, const SpacePtr& s, const QVec& x);
MultiVector generating_vector_field(const ModuleRep& m, const SpacePtr& s, int a);
// generating fields restricted to a coordinate block [begin, end)
MultiVector partial_vector_field(const ModuleRep& m, const SpacePtr& s, int a, int begin, int end);

// Elements of the exterior algebra on a finite set of generators.
class Grassmann {
 public:
  using Key = std::vector<int>;
  Grassmann() = default;
  explicit Grassmann(int ngens) : n_(ngens) {}
  static Grassmann gen(int ngens, int i);

  int ngens() const { return n_; }
  const std::map<Key, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Key k, const Q& c);  // sorts k with sign
  Q coeff(const Key& k) const;

  Grassmann& operator+=(const Grassmann& o);
  Grassmann& operator-=(const Grassmann& o);
  Grassmann& operator*=(const Q& c);
  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  friend Grassmann operator*(Grassmann a, const Q& c) { return a *= c; }
  friend bool operator==(const Grassmann& a, const Grassmann& b) { return a.terms_ == b.terms_; }
  friend Grassmann wedge(const Grassmann& a, const Grassmann& b);

  // image under the algebra map generator i -> images[i]
  MultiVector lift(const std::vector<MultiVector>& images) const;
  std::string str(const std::vector<std::string>& labels) const;

 private:
  int n_ = 0;
  std::map<Key, Q> terms_;
};

// derivation extension of ad_x to ⋀g
Grassmann ad_action(const LieAlgebra& g, const QVec& x, const Grassmann& w);

std::vector<MultiVector> basis_lifts(const ModuleRep& m, const SpacePtr& s);
// (1/12) Σ B_g(u_a,[u_b,u_c]) u^a∧u^b∧u^c
Grassmann cartan_trivector(const LieAlgebra& g);

struct RMatrixData {
  QMatrix r;       // r = Σ r(a,b) u_a ⊗ u_b
  Grassmann t;     // r − r^op in ⋀²g
  std::vector<Grassmann> cobracket;  // δ(u_a) = ad_{u_a}(t)
};
RMatrixData standard_r_matrix(const LieAlgebra& g);

// ⟨t,t⟩ = [t12,t13] + [t12,t23] + [t13,t23] as a 3-tensor, component (a,b,c)
std::map<std::vector<int>, Q> drinfeld_tensor(const LieAlgebra& g, const QMatrix& t);
// antisymmetric 3-tensor to ⋀³g (a∧b∧c ↔ Σ sign a⊗b⊗c)
Grassmann tensor_to_wedge(const std::map<std::vector<int>, Q>& t, int n);
std::map<std::vector<int>, Q> wedge_to_tensor(const Grassmann& w);
Grassmann drinfeld_bracket(const LieAlgebra& g, const Grassmann& t);

// ψ = ½ Σ u_a¹ ∧ (u^a)² in ⋀²(g⊕g), generators a (first copy), dim+a (second)
Grassmann fusion_psi(const LieAlgebra& g);

std::string family_name(Family f);

}  // namespace qm
