// Drinfeld double of the four-dimensional Sweedler algebra: a
// non-commutative, non-semisimple, factorisable Hopf algebra without ribbon
// element. It separates formulas that agree on commutative presets.
#include <doctest.h>

#include "qhopf/coend.hpp"
#include "qhopf/format.hpp"
#include "qhopf/modular.hpp"
#include "qhopf/repcat.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const AlgebraFile& fixture() {
  static const AlgebraFile f = parse_algebra_file(data_path("double_sweedler.qha"));
  return f;
}

}  // namespace

TEST_SUITE("sweedler") {
  TEST_CASE("axioms") {
    const auto& A = fixture().algebra;
    CHECK(A.is_hopf());
    CHECK(validate(A).all_passed());
  }

  TEST_CASE("Drinfeld elements") {
    const auto& A = fixture().algebra;
    const DrinfeldElement d = drinfeld_element(A);
    CHECK(d.u_tilde == antipode(A, d.u_inv));
    CHECK_FALSE(d.u_inv_from_ribbon);
    CHECK(prod(A, d.u, d.u_inv) == one(A));
  }

  TEST_CASE("general formulas reduce to the Hopf formulas") {
    const auto& A = fixture().algebra;
    const CoendMaps g = coend_maps(A), h = hopf_coend_maps(A);
    CHECK(g.mu_hat == h.mu_hat);
    CHECK(g.delta_hat == h.delta_hat);
    CHECK(g.eta_hat == h.eta_hat);
    CHECK(g.eps_hat == h.eps_hat);
    CHECK(g.s_hat_L == h.s_hat_L);
    CHECK(g.omega_hat == h.omega_hat);
  }

  TEST_CASE("pairing from Q_hat through the counit") {
    const auto& A = fixture().algebra;
    const CoendMaps m = coend_maps(A);
    const ExactMatrix Q = q_hat(A);
    Tensor w(A.dim, 2);
    for (int x = 0; x < A.dim; ++x)
      for (int y = 0; y < A.dim; ++y) {
        const auto col = Q.col(x * A.dim + y);
        for (std::size_t i = 0; i < col.size(); ++i) w[i] += col[i] * m.eps_hat[x] * m.eps_hat[y];
      }
    CHECK(w == m.omega_hat);
    CHECK(subscript(w, {2, 1}) != m.omega_hat);
    CHECK(m_bt(A) == m_bt_alternative(A));
    CHECK(d_hat(A, m) == d_hat_from_omega(A, m));
  }

  TEST_CASE("factorisability and integrals") {
    const auto& A = fixture().algebra;
    const CoendMaps maps = coend_maps(A);
    const FactorisabilityReport r = factorisability(A, maps);
    CHECK(r.rank_D == 16);
    CHECK(r.rank_BT == 16);
    CHECK(r.omega_test);
    CHECK(r.tests_agree);
    CHECK(r.d_routes_agree);
    CHECK(r.bt_routes_agree);
    const IntegralResult I = integral_L(A, maps);
    CHECK(I.dimension() == 1);
    const CointegralResult c = cointegral_L(A, I.lambda_hat);
    REQUIRE(c.c.has_value());
    CHECK(satisfies_cointegral_conditions(A, maps, *c.c));
    CHECK_FALSE(c.lambda_of_c.is_zero());
    // Not semisimple: the integral is killed by the counit.
    Scalar eps_c;
    for (int i = 0; i < A.dim; ++i) eps_c += A.counit[i] * (*c.c)[i];
    CHECK(eps_c.is_zero());
  }
}

TEST_SUITE("sweedler_braided") {
  TEST_CASE("L is a braided Hopf algebra with a Hopf pairing") {
    const auto& A = fixture().algebra;
    const BraidedHopfReport r = verify_braided_hopf(A, coend_maps(A));
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
      CHECK(c.skipped == (c.name == "f.antipode_squared_twist"));
    }
  }
}

TEST_SUITE("sweedler_drinfeld") {
  TEST_CASE("Drinfeld isomorphisms from their composites") {
    const auto& A = fixture().algebra;
    const DrinfeldElement d = drinfeld_element(A);
    const AModule reg = regular_module(A);
    CHECK(drinfeld_iso(A, reg) == act(A, d.u, reg));
    CHECK(drinfeld_iso_tilde(A, reg) == act(A, d.u_tilde, reg));
  }
}
