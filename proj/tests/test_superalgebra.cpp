#include <doctest.h>

#include "qm/linalg.hpp"
#include "qm/supermatrix.hpp"

using namespace qm;

namespace {

TablePtr mixed() {
  return make_table({"x", "y", "a", "b", "c"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd, Parity::Odd});
}

}  // namespace

TEST_CASE("odd generators anticommute and square to zero") {
  auto t = mixed();
  auto a = SuperPoly::gen(t, "a"), b = SuperPoly::gen(t, "b"), x = SuperPoly::gen(t, "x");
  CHECK((a * b + b * a).is_zero());
  CHECK((a * a).is_zero());
  CHECK(x * a == a * x);
  CHECK((a * b * x).parity() == 0);
  CHECK((a * x).parity() == 1);
  CHECK((a + x).parity() == -1);
}

TEST_CASE("parser round trip") {
  auto t = mixed();
  for (const char* s : {"x^2 - 1/3 ab", "2 + xab - 1/2 y^3", "abc", "-c + b"}) {
    auto p = parse_poly(t, s);
    CHECK(parse_poly(t, p.str()) == p);
  }
  CHECK(parse_poly(t, "ba") == -parse_poly(t, "ab"));
  CHECK(parse_poly(t, "1/2(x - y)") == parse_poly(t, "1/2 x - 1/2 y"));
  CHECK_THROWS_AS(parse_poly(t, "x + z"), AlgebraError);
}

TEST_CASE("left and right derivatives differ by the expected sign") {
  auto t = mixed();
  auto p = parse_poly(t, "x ab + y bc");
  int b = t->index("b");
  // d/db from the left of a b: -a; from the right: a
  CHECK(p.lder(b) == parse_poly(t, "-x a + y c"));
  CHECK(p.rder(b) == parse_poly(t, "x a - y c"));
}

TEST_CASE("super inverse of a nilpotent perturbation is a finite series") {
  auto t = mixed();
  auto p = parse_poly(t, "2 + ab + bc");
  auto inv = super_inverse(p);
  CHECK(p * inv == SuperPoly::constant(t, 1));
  // oracle: 1/(2+n) = 1/2 - n/4 + n^2/8 with n = ab + bc, n^2 = 0
  CHECK(inv == parse_poly(t, "1/2 - 1/4 ab - 1/4 bc"));
  CHECK_THROWS_AS(super_inverse(parse_poly(t, "ab")), AlgebraError);
}

TEST_CASE("truncated inverse and square root over even generators") {
  auto t = mixed();
  auto p = parse_poly(t, "1 + x");
  auto inv = super_inverse(p, 4);
  CHECK(inv == parse_poly(t, "1 - x + x^2 - x^3 + x^4"));
  auto s = super_sqrt(parse_poly(t, "4 + x"), 3);
  CHECK(SuperPoly::multiply(s, s, 3) == parse_poly(t, "4 + x"));
}

TEST_CASE("rational linear algebra") {
  QMatrix a(3, 3);
  int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = v[i][j];
  CHECK(rank(a) == 2);
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  auto img = a.apply(ns[0]);
  for (const auto& x : img) CHECK(x == 0);
  CHECK_THROWS_AS(inverse(a), AlgebraError);
  a(1, 1) = 5;
  CHECK(a * inverse(a) == QMatrix::identity(3));
}

TEST_CASE("supermatrix inverse and exponential") {
  auto t = mixed();
  SuperMatrix m(t, 2);
  m(0, 0) = parse_poly(t, "1 + ab");
  m(0, 1) = parse_poly(t, "bc");
  m(1, 0) = parse_poly(t, "ac");
  m(1, 1) = parse_poly(t, "3");
  auto inv = super_inverse(m);
  CHECK(m * inv == SuperMatrix::identity(t, 2));
  CHECK(inv * m == SuperMatrix::identity(t, 2));
  SuperMatrix n(t, 2);
  n(0, 1) = parse_poly(t, "ab");
  int last = -1;
  auto e = super_exp(n, &last);
  CHECK(last == 1);
  CHECK(e == SuperMatrix::identity(t, 2) + n);
}
