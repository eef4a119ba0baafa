#include <doctest.h>

#include "qm/forms.hpp"
#include "qm/moment.hpp"

using namespace qm;

namespace {

FormSpacePtr mixed() { return make_form_space({"x", "y", "a", "b"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}); }

}  // namespace

TEST_CASE("differentials have flipped parity") {
  auto s = mixed();
  const auto& t = s->table();
  CHECK(t->name(4) == "dx");
  CHECK(t->odd(4));
  CHECK_FALSE(t->odd(6));
  auto dx = s->theta(0), da = s->theta(2);
  CHECK((dx * dx).is_zero());
  CHECK(!(da * da).is_zero());
}

TEST_CASE("exterior derivative of functions and forms") {
  auto s = mixed();
  const auto& t = s->table();
  CHECK(exterior_derivative(*s, parse_poly(t, "x^2 y")) == parse_poly(t, "2xy dx + x^2 dy"));
  CHECK(exterior_derivative(*s, parse_poly(t, "ab")) == parse_poly(t, "da b - a db"));
  auto w = parse_poly(t, "x dy + a db");
  auto dw = exterior_derivative(*s, w);
  CHECK(dw == parse_poly(t, "dx dy + da db"));
  CHECK(exterior_derivative(*s, dw).is_zero());
  CHECK(form_degree(*s, dw) == 2);
  CHECK(form_degree(*s, w + parse_poly(t, "x")) == -1);
}

TEST_CASE("interior product contracts the differentials") {
  auto s = mixed();
  const auto& t = s->table();
  std::vector<SuperPoly> x{parse_poly(t, "1"), SuperPoly(t), SuperPoly(t), SuperPoly(t)};
  CHECK(interior_product(*s, x, parse_poly(t, "dx dy")) == parse_poly(t, "dy"));
  CHECK(interior_product(*s, x, parse_poly(t, "dy dx")) == parse_poly(t, "-dy"));
  CHECK(interior_product(*s, x, parse_poly(t, "x + da")).is_zero());
}

TEST_CASE("Cartan formula on an even field") {
  auto s = mixed();
  const auto& t = s->table();
  std::vector<SuperPoly> x{parse_poly(t, "y"), parse_poly(t, "-x"), parse_poly(t, "b"), parse_poly(t, "a")};
  for (const char* w : {"x^2 dy", "a db + x dx", "ab dx dy", "y da da"}) {
    CAPTURE(w);
    auto f = parse_poly(t, w);
    auto lhs = lie_derivative(*s, x, f);
    auto rhs = interior_product(*s, x, exterior_derivative(*s, f)) + exterior_derivative(*s, interior_product(*s, x, f));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("two-form body of the bilinear form") {
  auto s = mixed();
  const auto& t = s->table();
  auto w = parse_poly(t, "dx dy + da da");
  auto m = two_form_body(*s, w);
  CHECK(m(0, 1) == -m(1, 0));
  CHECK(m(2, 2) != 0);
}

TEST_CASE("Maurer-Cartan form of exp(mu) satisfies the structure equation") {
  auto st = make_setting(parse_module_spec("sl(2):adjoint:odd").rep);
  auto phi = exp_moment(st, moment_matrix(st, moment_map(st))).phi;
  auto fs = form_space_like(*st.space);
  auto a = maurer_cartan_pullback(*fs, phi);
  bool nonzero = false;
  for (const auto& row : a)
    for (const auto& e : row) nonzero = nonzero || !e.is_zero();
  CHECK(nonzero);
  for (const auto& row : structure_equation_residual(*fs, a))
    for (const auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("coords_to refuses differentials") {
  auto s = mixed();
  auto other = make_form_space({"x", "y", "a", "b"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  CHECK(coords_to(parse_poly(s->table(), "xa"), other->table()) == parse_poly(other->table(), "xa"));
  auto narrow = make_table({"x"}, {Parity::Even});
  CHECK_THROWS_AS(coords_to(parse_poly(s->table(), "y"), narrow), AlgebraError);
}
