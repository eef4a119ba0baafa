#include <doctest.h>

#include "qm/invariants.hpp"
#include "qm/liealg.hpp"

using namespace qm;

namespace {

bool jacobi_holds(const LieAlgebra& g) {
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto ea = g.dual(a), eb = g.dual(b), ec = g.dual(c);
        QVec x(n), y(n), z(n);
        x[a] = 1, y[b] = 1, z[c] = 1;
        auto s1 = g.bracket(x, g.bracket(y, z));
        auto s2 = g.bracket(y, g.bracket(z, x));
        auto s3 = g.bracket(z, g.bracket(x, y));
        for (int i = 0; i < n; ++i)
          if (s1[i] + s2[i] + s3[i] != 0) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("classical algebras have the right dimensions and satisfy Jacobi") {
  std::vector<std::pair<std::string, int>> cases = {{"sl(2)", 3}, {"sl(3)", 8}, {"sl(4)", 15}, {"so(5)", 10},
                                                    {"so(6)", 15}, {"sp(4)", 10}, {"sp(6)", 21}};
  for (const auto& [spec, dim] : cases) {
    CAPTURE(spec);
    auto g = parse_algebra(spec);
    CHECK(g->dim() == dim);
    CHECK(g->positive.size() == g->negative.size());
    if (dim <= 15) CHECK(jacobi_holds(*g));
  }
  CHECK_THROWS(parse_algebra("e(8)"));
}

TEST_CASE("structure constants agree with matrix commutators") {
  auto g = parse_algebra("sp(4)");
  for (int a = 0; a < g->dim(); ++a)
    for (int b = 0; b < g->dim(); ++b) {
      QMatrix sum(g->n, g->n);
      for (int c = 0; c < g->dim(); ++c) sum = sum + g->defining[c] * g->structure[a][b][c];
      CHECK(sum == commutator(g->defining[a], g->defining[b]));
    }
}

TEST_CASE("listed modules are representations with invariant forms") {
  for (const auto& spec : listed_pairs()) {
    CAPTURE(spec);
    auto m = parse_module_spec(spec);
    CHECK(check_representation(*m.rep));
    CHECK(m.rep->has_form);
    CHECK(check_form_invariant(*m.rep));
  }
}

TEST_CASE("half-spin modules of so(8) are eight-dimensional and self-dual") {
  auto g = parse_algebra("so(8)");
  for (bool even : {true, false}) {
    auto s = spinor_module(g, even);
    CHECK(s->dim == 8);
    CHECK(check_representation(*s));
    CHECK(invariant_forms(*s, 1).size() == 1);
    CHECK(invariant_forms(*s, -1).empty());
  }
}

TEST_CASE("forms of the wrong symmetry are refused") {
  CHECK_THROWS(parse_module_spec("sl(2):v1:odd"));
  CHECK_NOTHROW(parse_module_spec("sl(2):v1:even"));
  CHECK_THROWS(parse_module_spec("sp(4):v1:odd"));
}

TEST_CASE("small Hom spaces") {
  auto g = parse_algebra("so(5)");
  auto v = parse_tensor_expr(g, "v1"), ad = parse_tensor_expr(g, "adjoint"), w2 = parse_tensor_expr(g, "wedge2(v1)");
  CHECK(hom_dimension(*g, v, v) == 1);
  CHECK(hom_dimension(*g, w2, ad) == 1);
  CHECK(hom_dimension(*g, v, ad) == 0);
}

TEST_CASE("generating fields form a representation of the algebra") {
  for (const auto& spec : {"sl(2):adjoint:odd", "sp(4):v1:even", "so(5):v1:odd"}) {
    CAPTURE(spec);
    auto m = parse_module_spec(spec);
    auto s = phase_space(*m.rep);
    const auto& g = *m.g;
    auto lifts = basis_lifts(*m.rep, s);
    // [x_V, y_V] = ±[x, y]_V with one global sign fixed by the convention
    int sign = 0;
    bool ok = true;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        QVec xa(g.dim()), xb(g.dim());
        xa[a] = 1, xb[b] = 1;
        auto lhs = schouten(lifts[a], lifts[b]);
        auto rhs = generating_vector_field(*m.rep, s, g.bracket(xa, xb));
        if (rhs.is_zero()) {
          ok = ok && lhs.is_zero();
          continue;
        }
        int here = lhs == rhs ? 1 : (lhs == -rhs ? -1 : 0);
        if (sign == 0) sign = here;
        ok = ok && here != 0 && here == sign;
      }
    CHECK(ok);
  }
}

TEST_CASE("standard r-matrix satisfies the modified classical Yang-Baxter equation") {
  // <t,t> is a multiple of the Cartan 3-tensor
  for (const auto& spec : {"sl(2)", "sl(3)", "so(5)"}) {
    CAPTURE(spec);
    auto g = parse_algebra(spec);
    auto r = standard_r_matrix(*g);
    auto db = drinfeld_bracket(*g, r.t);
    auto phi = cartan_trivector(*g);
    CHECK(!db.is_zero());
    // find the ratio on one term and compare the rest
    auto it = phi.terms().begin();
    Q ratio = db.coeff(it->first) / it->second;
    CHECK(db == phi * ratio);
  }
}
