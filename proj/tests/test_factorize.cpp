#include <doctest.h>

#include "qm/factorize.hpp"

using namespace qm;

namespace {

TablePtr table() {
  return make_table({"x", "a", "b"}, {Parity::Even, Parity::Odd, Parity::Odd});
}

SuperMatrix mat(const TablePtr& t, const std::vector<std::vector<std::string>>& rows) {
  SuperMatrix m(t, static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_poly(t, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("Gauss factors reconstruct the matrix") {
  auto t = table();
  auto phi = mat(t, {{"2 + ab", "a", "1"}, {"b", "3", "ab"}, {"1", "a", "1"}});
  auto g = gauss_udl(phi);
  CHECK(g.upper.is_upper_triangular());
  CHECK(g.lower.is_lower_triangular());
  for (int i = 0; i < 3; ++i) {
    CHECK(g.upper(i, i) == SuperPoly::constant(t, 1));
    CHECK(g.lower(i, i) == SuperPoly::constant(t, 1));
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(g.diagonal(i, j).is_zero());
  }
  CHECK(g.upper * g.diagonal * g.lower == phi);
}

TEST_CASE("square-root split lands in the dual group") {
  auto t = table();
  auto phi = mat(t, {{"4 + ab", "a"}, {"b", "1"}});
  auto l = gauss_factorize(phi);
  CHECK(valid_gstar(l));
  CHECK(l.plus * super_inverse(l.minus) == phi);
}

TEST_CASE("unipotent matrices factor trivially") {
  auto t = table();
  auto phi = mat(t, {{"1", "ab"}, {"0", "1"}});
  auto g = gauss_udl(phi);
  CHECK(g.upper == phi);
  CHECK(g.diagonal == SuperMatrix::identity(t, 2));
  CHECK(g.lower == SuperMatrix::identity(t, 2));
}

TEST_CASE("singular leading body is rejected") {
  auto t = table();
  auto phi = mat(t, {{"1", "1"}, {"1", "ab"}});
  CHECK_THROWS_AS(gauss_udl(phi), AlgebraError);
}

TEST_CASE("dual group test rejects wrong shapes") {
  auto t = table();
  GStarElement l{mat(t, {{"2", "a"}, {"0", "1"}}), mat(t, {{"1/2", "0"}, {"b", "1"}})};
  CHECK(valid_gstar(l));
  l.minus(0, 1) = parse_poly(t, "a");
  CHECK_FALSE(valid_gstar(l));
  l.minus(0, 1) = SuperPoly(t);
  l.minus(1, 1) = parse_poly(t, "2");
  CHECK_FALSE(valid_gstar(l));
}
