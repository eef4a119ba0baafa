#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qm/liealg.hpp"

namespace qm {

class TensorModuleExpr;
using ExprPtr = std::shared_ptr<const TensorModuleExpr>;

// Module built from representation leaves by duals, tensor products,
// exterior and symmetric powers and direct sums.
class TensorModuleExpr {
 public:
  enum class Kind { Leaf, Dual, Tensor, Wedge, Sym, Sum };

  static ExprPtr leaf(ModulePtr m);
  static ExprPtr dual(ExprPtr a);
  static ExprPtr tensor(ExprPtr a, ExprPtr b);
  static ExprPtr wedge(ExprPtr a, int k);
  static ExprPtr sym(ExprPtr a, int k);
  static ExprPtr sum(std::vector<ExprPtr> parts);

  Kind kind() const { return kind_; }
  const ModulePtr& module() const { return leaf_; }
  const std::vector<ExprPtr>& children() const { return children_; }
  int power() const { return k_; }
  // product/binomial formula
  int64_t dim() const;
  std::string str() const;

 private:
  Kind kind_ = Kind::Leaf;
  ModulePtr leaf_;
  std::vector<ExprPtr> children_;
  int k_ = 0;
};

// "wedge3(v1)*dual(sym3(v1))", "adjoint*adjoint", "spinor+ + trivial"
ExprPtr parse_tensor_expr(const AlgebraPtr& g, const std::string& text);

struct InvariantOptions {
  bool parallel = true;
  int64_t bound = 20000;  // limit on the weight-zero subspace
};

// dim M^g: weight-zero vectors killed by every simple raising operator
int64_t invariant_dimension(const LieAlgebra& g, const ExprPtr& m, const InvariantOptions& opt = {});
// dim Hom_g(A, B) = dim (A* ⊗ B)^g
int64_t hom_dimension(const LieAlgebra& g, const ExprPtr& a, const ExprPtr& b, const InvariantOptions& opt = {});
// joint kernel of the full action of every basis element on all of M; small modules only
int64_t invariant_dimension_reference(const LieAlgebra& g, const ExprPtr& m);
// size of the weight-zero subspace
int64_t zero_weight_dimension(const LieAlgebra& g, const ExprPtr& m);

// Sparse exact rank. Rows are (column, value) lists with distinct columns.
using SparseRow = std::vector<std::pair<int64_t, Q>>;
int64_t sparse_rank_serial(const std::vector<SparseRow>& rows);
// rows split into chunks reduced concurrently, then merged
int64_t sparse_rank_parallel(const std::vector<SparseRow>& rows);

struct BranchingRow {
  std::string pair;   // module spec
  std::string label;  // "Hom(wedge3(V), sym3(V))"
  std::string a, b;   // tensor expressions
  int64_t dim = 0;
  std::string claim;  // "zero", "nonzero" or empty
};
// vanishing and non-vanishing statements for one pair and for all classified pairs
std::vector<BranchingRow> branching_rows(const std::string& pair, bool parallel = true);
std::vector<BranchingRow> branching_table(bool parallel = true);
inline bool claim_holds(const BranchingRow& r) {
  return r.claim.empty() || (r.claim == "zero") == (r.dim == 0);
}

}  // namespace qm
