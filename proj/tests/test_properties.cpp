#include <doctest.h>

#include <random>

#include "qm/factorize.hpp"
#include "qm/forms.hpp"
#include "qm/multivector.hpp"

using namespace qm;

namespace {

constexpr int kCases = 200;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }
  Q coeff() {
    long v = pick(7) - 3;
    return Q(v == 0 ? 1 : v) / Q(1 + pick(2));
  }

  // product of `count` generators drawn from [begin, end) times the monomial `m`
  SuperPoly mono(const TablePtr& t, int begin, int end, int count) {
    auto p = SuperPoly::constant(t, 1);
    for (int k = 0; k < count; ++k) p = p * SuperPoly::gen(t, begin + pick(end - begin));
    return p;
  }

  // random polynomial multivector of fixed form degree and total parity (-1: any)
  SuperPoly multivector(const PhaseSpace& s, int degree, int parity, int terms = 3, int max_coeff_degree = 2) {
    const auto& t = s.table();
    SuperPoly out(t);
    int made = 0;
    for (int tries = 0; made < terms && tries < 200; ++tries) {
      auto c = mono(t, 0, s.dim(), pick(max_coeff_degree + 1));
      auto m = c * mono(t, s.dim(), 2 * s.dim(), degree);
      if (m.is_zero() || (parity >= 0 && m.parity() != parity)) continue;
      out += m * coeff();
      ++made;
    }
    return out;
  }
};

SpacePtr space() {
  return make_space({"x", "y", "a", "b"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
}

int sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("Schouten bracket: graded Jacobi identity") {
  auto s = space();
  Gen g(101);
  for (int i = 0; i < kCases; ++i) {
    int p = g.pick(2), q = g.pick(2);
    MultiVector P(s, g.multivector(*s, 1 + g.pick(2), p));
    MultiVector Qm(s, g.multivector(*s, 1 + g.pick(2), q));
    MultiVector R(s, g.multivector(*s, g.pick(3), g.pick(2)));
    if (P.is_zero() || Qm.is_zero()) { --i; continue; }  // redraw degenerate cases
    auto lhs = schouten(P, schouten(Qm, R));
    auto rhs = schouten(schouten(P, Qm), R) + schouten(Qm, schouten(P, R)) * Q(sign((p + 1) * (q + 1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Schouten bracket: graded antisymmetry and Leibniz rule") {
  auto s = space();
  Gen g(202);
  for (int i = 0; i < kCases; ++i) {
    int p = g.pick(2), q = g.pick(2);
    MultiVector P(s, g.multivector(*s, 1 + g.pick(2), p));
    MultiVector Qm(s, g.multivector(*s, g.pick(3), q));
    MultiVector R(s, g.multivector(*s, g.pick(3), g.pick(2)));
    if (P.is_zero() || Qm.is_zero()) { --i; continue; }  // redraw degenerate cases
    CHECK(schouten(P, Qm) == schouten(Qm, P) * Q(-sign((p + 1) * (q + 1))));
    auto lhs = schouten(P, wedge(Qm, R));
    auto rhs = wedge(schouten(P, Qm), R) + wedge(Qm, schouten(P, R)) * Q(sign((p + 1) * q));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Jacobiator of a bivector is half its Schouten square") {
  auto s = space();
  Gen g(303);
  const auto& t = s->table();
  for (int i = 0; i < kCases; ++i) {
    MultiVector pi(s, g.multivector(*s, 2, 0, 2, 2));
    auto f = g.multivector(*s, 0, -1, 2, 2), gg = g.multivector(*s, 0, -1, 2, 2), h = g.multivector(*s, 0, -1, 2, 2);
    // homogeneous pieces only
    f = g.pick(2) ? f.even_part() : f.odd_part();
    gg = g.pick(2) ? gg.even_part() : gg.odd_part();
    h = g.pick(2) ? h.even_part() : h.odd_part();
    if (f.is_zero() || gg.is_zero() || h.is_zero()) { --i; continue; }  // redraw degenerate cases
    auto br = [&](const SuperPoly& u, const SuperPoly& v) { return apply_bivector(pi, u, v); };
    int pf = f.parity(), pg = gg.parity();
    auto jac = br(f, br(gg, h)) - br(br(f, gg), h) - br(gg, br(f, h)) * Q(sign(pf * pg));
    auto want = apply_trivector(schouten(pi, pi), f, gg, h) * Q(-1, 2);
    CHECK(jac == want);
    (void)t;
  }
}

TEST_CASE("exterior derivative squares to zero") {
  auto s = make_form_space({"x", "y", "a", "b"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  Gen g(404);
  for (int i = 0; i < kCases; ++i) {
    auto w = g.multivector(*s, g.pick(3), -1, 4, 3);
    CHECK(exterior_derivative(*s, exterior_derivative(*s, w)).is_zero());
  }
}

TEST_CASE("Cartan formula for even and odd vector fields") {
  auto s = make_form_space({"x", "y", "a", "b"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  Gen g(505);
  const auto& t = s->table();
  for (int i = 0; i < kCases; ++i) {
    int px = g.pick(2);
    std::vector<SuperPoly> x;
    for (int j = 0; j < s->dim(); ++j) {
      auto c = g.multivector(*s, 0, -1, 2, 2);
      int want = (px + (s->coord_odd(j) ? 1 : 0)) % 2;
      x.push_back(want ? c.odd_part() : c.even_part());
    }
    auto w = g.multivector(*s, g.pick(3), -1, 3, 2);
    auto id = interior_product(*s, x, exterior_derivative(*s, w));
    auto di = exterior_derivative(*s, interior_product(*s, x, w));
    auto want = px ? id - di : id + di;
    CHECK(lie_derivative(*s, x, w) == want);
    (void)t;
  }
}

TEST_CASE("super inverse round trip") {
  auto t = make_table({"x", "y", "a", "b", "c", "e"},
                      {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd});
  Gen g(606);
  for (int i = 0; i < kCases; ++i) {
    // odd-nilpotent perturbation of a nonzero constant: exact inverse
    auto p = SuperPoly::constant(t, g.coeff());
    for (int k = 0; k < 3; ++k) p += g.mono(t, 2, 6, 2 + g.pick(2) * 2) * g.coeff();
    auto inv = super_inverse(p);
    CHECK(p * inv == SuperPoly::constant(t, 1));
    CHECK(inv * p == SuperPoly::constant(t, 1));
    // with even generators the series is truncated
    int n = 2 + g.pick(3);
    auto e = p + g.mono(t, 0, 2, 1 + g.pick(2)) * g.coeff();
    auto ie = super_inverse(e, n);
    CHECK(SuperPoly::multiply(e, ie, n) == SuperPoly::constant(t, 1));
  }
}

TEST_CASE("supermatrix inverse round trip") {
  auto t = make_table({"a", "b", "c", "e"}, {Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd});
  Gen g(707);
  for (int i = 0; i < kCases; ++i) {
    int n = 2 + g.pick(2);
    SuperMatrix m(t, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        m(r, c) = SuperPoly::constant(t, r == c ? Q(1 + g.pick(3)) : Q(g.pick(3) - 1));
        if (g.pick(2)) m(r, c) += g.mono(t, 0, 4, 2) * g.coeff();
      }
    if (rank(m.body()) < n) { --i; continue; }  // redraw degenerate cases
    auto inv = super_inverse(m);
    CHECK(m * inv == SuperMatrix::identity(t, n));
  }
}

TEST_CASE("Gauss factorization reconstructs U D L bodies with nilpotent perturbations") {
  auto t = make_table({"a", "b", "c", "e"}, {Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd});
  Gen g(808);
  for (int i = 0; i < kCases; ++i) {
    int n = 2 + g.pick(2);
    QMatrix u = QMatrix::identity(n), d(n, n), l = QMatrix::identity(n);
    for (int r = 0; r < n; ++r) {
      Q root = 1 + g.pick(3);
      d(r, r) = root * root;
      for (int c = r + 1; c < n; ++c) {
        u(r, c) = g.pick(5) - 2;
        l(c, r) = g.pick(5) - 2;
      }
    }
    auto phi = SuperMatrix::from(t, u * d * l);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (g.pick(2)) phi(r, c) += g.mono(t, 0, 4, 2) * g.coeff();
    auto f = gauss_udl(phi);
    CHECK(f.upper * f.diagonal * f.lower == phi);
    auto gs = gauss_factorize(phi);
    CHECK(valid_gstar(gs));
    CHECK(gs.plus * super_inverse(gs.minus) == phi);
  }
}
