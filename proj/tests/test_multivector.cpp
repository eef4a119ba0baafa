#include <doctest.h>

#include "qm/multivector.hpp"

using namespace qm;

namespace {

SpacePtr plane() { return make_space({"x", "y", "a"}, {Parity::Even, Parity::Even, Parity::Odd}); }

}  // namespace

TEST_CASE("vector fields act as derivations through the Schouten bracket") {
  auto s = plane();
  auto x = MultiVector::parse(s, "y ∂x + a ∂a");
  auto f = parse_poly(s->table(), "x^2 y + x a");
  CHECK(apply_vector_field(x, f) == parse_poly(s->table(), "2xy^2 + ya + xa"));
}

TEST_CASE("Schouten bracket of vector fields is their commutator") {
  auto s = plane();
  auto u = MultiVector::parse(s, "x ∂y");
  auto v = MultiVector::parse(s, "y ∂x");
  // [x∂y, y∂x] = x∂x - y∂y
  CHECK(schouten(u, v) == MultiVector::parse(s, "x ∂x - y ∂y"));
}

TEST_CASE("constant bivector gives the canonical bracket") {
  auto s = plane();
  auto pi = MultiVector::parse(s, "∂x∂y");
  const auto& t = s->table();
  CHECK(apply_bivector(pi, s->x(0), s->x(1)) == SuperPoly::constant(t, 1));
  CHECK(apply_bivector(pi, s->x(1), s->x(0)) == SuperPoly::constant(t, -1));
  CHECK(schouten(pi, pi).is_zero());
  CHECK(pi.form_degree() == 2);
}

TEST_CASE("odd coordinate bivector is symmetric") {
  auto s = make_space({"a", "b"}, {Parity::Odd, Parity::Odd});
  auto pi = MultiVector::parse(s, "∂a∂b");
  auto ab = apply_bivector(pi, s->x(0), s->x(1));
  auto ba = apply_bivector(pi, s->x(1), s->x(0));
  CHECK(!ab.is_zero());
  CHECK(ab == ba);
}

TEST_CASE("bigrading of a quadratic bivector") {
  auto s = plane();
  auto pi = MultiVector::parse(s, "xy ∂x∂y + ∂x∂y");
  auto g = bigrades(pi);
  CHECK(g.size() == 2);
  CHECK(bigrade_component(pi, 2, 0) == MultiVector::parse(s, "xy ∂x∂y"));
}

TEST_CASE("Hamiltonian field of the canonical bracket") {
  auto s = plane();
  auto pi = MultiVector::parse(s, "∂x∂y");
  auto h = hamiltonian_field(pi, parse_poly(s->table(), "x"));
  auto y = s->x(1);
  CHECK(apply_vector_field(h, y) == apply_bivector(pi, s->x(0), y));
}
