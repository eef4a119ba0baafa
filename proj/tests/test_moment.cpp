#include <doctest.h>

#include "qm/moment.hpp"

using namespace qm;

namespace {

Setting setting(const std::string& spec, int truncation = -1) {
  return make_setting(parse_module_spec(spec).rep, truncation);
}

// ad_M^k(Y) = Σ_j C(k,j) (−1)^j M^{k−j} Y M^j, evaluated on every ρ_W(u_b)
int nilpotency_oracle(const Setting& st) {
  auto mu = moment_map(st);
  auto m = moment_matrix(st, mu);
  const auto& t = st.space->table();
  int n = st.n_w();
  std::vector<SuperMatrix> pw{SuperMatrix::identity(t, n, st.truncation)};
  for (int k = 1; k <= 2 * st.dim_g() + 2; ++k) {
    pw.push_back(pw.back() * m);
    bool all_zero = true;
    for (int b = 0; b < st.dim_g() && all_zero; ++b) {
      auto y = SuperMatrix::from(t, st.g->defining[b], st.truncation);
      SuperMatrix acc(t, n, st.truncation);
      Q binom = 1;
      for (int j = 0; j <= k; ++j) {
        auto term = pw[k - j] * y * pw[j];
        acc = acc + term * (j % 2 ? -binom : binom);
        binom = binom * (k - j) / (j + 1);
      }
      all_zero = acc.is_zero();
    }
    if (all_zero) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("phi series coefficients") {
  CHECK(phi_coefficient(0) == 0);
  CHECK(phi_coefficient(1) == Q(-1) / 12);
  CHECK(phi_coefficient(2) == 0);
  CHECK(phi_coefficient(3) == Q(1) / 720);
  CHECK(phi_coefficient(5) == Q(-1) / 30240);
  CHECK(phi_coefficient(7) == Q(1) / 1209600);
}

TEST_CASE("ad_mu nilpotency index agrees with the matrix-power oracle") {
  for (const auto& spec : listed_pairs()) {
    CAPTURE(spec);
    auto st = setting(spec, 6);
    CHECK(ad_mu_nilpotency(st, moment_map(st)) == nilpotency_oracle(st));
  }
}

TEST_CASE("moment map of the bilinear bivector is Hamiltonian and equivariant") {
  for (const auto& spec : {"sl(2):adjoint:odd", "sl(2):v1:even", "so(5):v1:odd", "sp(4):v1:even"}) {
    CAPTURE(spec);
    auto st = setting(spec, 6);
    auto mu = moment_map(st);
    auto pi = bilinear_bivector(*st.rep, st.space);
    CHECK(check_hamiltonian(st, pi, mu).pass);
    CHECK(check_moment_equivariance(st, mu).pass);
    // a rescaled map is no longer Hamiltonian
    CHECK_FALSE(check_hamiltonian(st, pi, scaled(mu, 2)).pass);
  }
}

TEST_CASE("bilinear bivector is Poisson and the twist is quasi-Poisson") {
  auto st = setting("sl(2):adjoint:odd");
  auto pi = bilinear_bivector(*st.rep, st.space);
  CHECK(schouten(pi, pi).is_zero());
  auto phi = phi_v(st);
  // phi_V is of type (3, -3): a constant trivector
  for (auto [i, j] : bigrades(phi)) {
    CHECK(i == 3);
    CHECK(j == -3);
  }
}

TEST_CASE("element and pairing forms of mu round trip") {
  for (const auto& spec : {"sl(3):v1+v1dual:odd", "so(6):v1:odd"}) {
    auto st = setting(spec);
    auto mu = moment_map(st);
    auto back = moment_from_element(st, moment_element(st, mu));
    for (int a = 0; a < st.dim_g(); ++a) CHECK(back.components[a] == mu.components[a]);
  }
}

TEST_CASE("exp of mu on the odd adjoint sl(2) is a group-valued moment map") {
  auto st = setting("sl(2):adjoint:odd");
  auto mu = moment_map(st);
  auto e = exp_moment(st, moment_matrix(st, mu));
  CHECK(e.degree == predicted_exp_degree(*st.rep));
  auto pi = bilinear_bivector(*st.rep, st.space) + dynamical_correction(st, mu);
  CHECK(check_quasi_poisson(st, pi).pass);
  CHECK(check_group_moment(st, pi, e.phi).pass);
  CHECK(check_phi_equivariance(st, e.phi).pass);
}

TEST_CASE("dynamical correction vanishes on a listed odd pair") {
  auto st = setting("so(5):v1:odd");
  auto mu = moment_map(st);
  CHECK(ad_mu_nilpotency(st, mu) == predicted_nilpotency(*st.rep));
  CHECK(dynamical_correction(st, mu).is_zero());
}

TEST_CASE("below_degree drops high coordinate degree") {
  auto t = make_table({"x", "y"}, {Parity::Even, Parity::Even});
  auto p = parse_poly(t, "1 + x + xy + x^3");
  CHECK(below_degree(p, 3, 2) == parse_poly(t, "1 + x"));
  CHECK(below_degree(p, 3, -1) == p);
}
