#include <doctest.h>

#include "qhopf/coend.hpp"
#include "qhopf/presets.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

void same_morphisms(const CoendMorphisms& a, const CoendMorphisms& b) {
  CHECK(a.mu == b.mu);
  CHECK(a.eta == b.eta);
  CHECK(a.delta == b.delta);
  CHECK(a.eps == b.eps);
  CHECK(a.S == b.S);
  CHECK(a.omega == b.omega);
}

std::vector<AModule> tangle_family(const AlgebraFile& f) {
  std::vector<AModule> mods{trivial_module(f.algebra), regular_module(f.algebra)};
  for (const auto& s : f.simples) mods.push_back(s);
  return mods;
}

}  // namespace

TEST_SUITE("coend") {
  TEST_CASE("trivial algebra maps") {
    const auto A = preset("trivial").algebra;
    const CoendMaps m = coend_maps(A);
    CHECK(m.mu_hat == ExactMatrix::identity(1));
    CHECK(m.delta_hat == ExactMatrix::identity(1));
    CHECK(m.s_hat_L == ExactMatrix::identity(1));
    CHECK(m.eps_hat == one(A));
    CHECK(m.eta_hat == std::vector<Scalar>{Scalar(1)});
    CHECK(q_hat(A) == ExactMatrix::identity(1));
    const FactorisabilityReport r = factorisability(A, m);
    CHECK(r.rank_D == 1);
    CHECK(r.is_factorisable);
  }

  TEST_CASE("Hopf presets reduce to the Hopf formulas") {
    for (const auto& name : preset_names()) {
      const auto A = preset(name).algebra;
      if (!A.is_hopf()) continue;
      CAPTURE(name);
      const CoendMaps g = coend_maps(A), h = hopf_coend_maps(A);
      CHECK(g.mu_hat == h.mu_hat);
      CHECK(g.delta_hat == h.delta_hat);
      CHECK(g.eta_hat == h.eta_hat);
      CHECK(g.eps_hat == h.eps_hat);
      CHECK(g.s_hat_L == h.s_hat_L);
      CHECK(g.omega_hat == h.omega_hat);
      // Delta_hat(a (x) b) = b a and omega_hat = sum S(M2) (x) M1.
      for (int x = 0; x < A.dim; ++x)
        for (int y = 0; y < A.dim; ++y)
          CHECK(Tensor::from_vector(g.delta_hat.col(x * A.dim + y)) ==
                prod(A, basis_element(A, y), basis_element(A, x)));
      const Tensor M = monodromy(A);
      CHECK(g.omega_hat == subscript(leg_map(M, 2, A.antipode), {2, 1}));
    }
  }

  TEST_CASE("element maps equal the categorical composites") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const auto& A = f.algebra;
      const CoendMorphisms m = coend_morphisms(A, coend_maps(A));
      same_morphisms(m, categorical_coend_morphisms(A));
      same_morphisms(m, categorical_coend_morphisms(A, f.simples));
    }
  }

  TEST_CASE("L is a braided Hopf algebra with a Hopf pairing") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto A = preset(name).algebra;
      const BraidedHopfReport r = verify_braided_hopf(A, coend_maps(A));
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
        CHECK_FALSE(c.skipped);
      }
      CHECK(r.checks.size() >= 20);
    }
  }

  TEST_CASE("a broken antipode is caught") {
    const auto A = preset("twisted_double_Z2").algebra;
    CoendMaps m = coend_maps(A);
    m.s_hat_L(0, 1) += Scalar(1);
    const BraidedHopfReport r = verify_braided_hopf(A, m);
    CHECK_FALSE(r.all_passed());
  }

  TEST_CASE("factorisability verdicts") {
    struct Expect {
      const char* name;
      bool factorisable;
      int rank;
    };
    for (const Expect e : {Expect{"trivial", true, 1}, Expect{"group_Z2_trivialR", false, 1},
                           Expect{"double_Z2", true, 4}, Expect{"twisted_double_Z2", true, 4}}) {
      CAPTURE(e.name);
      const auto A = preset(e.name).algebra;
      const FactorisabilityReport r = factorisability(A, coend_maps(A));
      CHECK(r.is_factorisable == e.factorisable);
      CHECK(r.rank_D == e.rank);
      CHECK(r.rank_BT == e.rank);
      CHECK(r.tests_agree);
      CHECK(r.d_routes_agree);
      CHECK(r.bt_routes_agree);
      CHECK(r.omega_test == e.factorisable);
      const FactorisabilityReport light = factorisability(A);
      CHECK(light.rank_D == r.rank_D);
      CHECK(light.rank_BT == r.rank_BT);
      CHECK(light.omega_iso_rank == r.omega_iso_rank);
    }
  }

  TEST_CASE("pairing and copairing routes") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto A = preset(name).algebra;
      const CoendMaps m = coend_maps(A);
      CHECK(d_hat(A, m) == d_hat_from_omega(A, m));
      CHECK(m_bt(A) == m_bt_alternative(A));
      // omega_L = (eps_L (x) eps_L) Q, so omega_hat = Q_hat(eps_hat (x) eps_hat).
      const ExactMatrix Q = q_hat(A);
      Tensor w(A.dim, 2);
      for (int x = 0; x < A.dim; ++x)
        for (int y = 0; y < A.dim; ++y) {
          const auto col = Q.col(x * A.dim + y);
          for (std::size_t i = 0; i < col.size(); ++i) w[i] += col[i] * m.eps_hat[x] * m.eps_hat[y];
        }
      CHECK(w == m.omega_hat);
    }
  }

  TEST_CASE("trivial R-matrix gives identity Q_hat") {
    const auto A = preset("group_Z2_trivialR").algebra;
    CHECK(q_hat(A).is_identity());
    CHECK(coend_maps(A).omega_hat == one(A, 2));
  }

  TEST_CASE("Hopf tangle through Q^BT") {
    for (const char* name : {"trivial", "double_Z2", "twisted_double_Z2"}) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const auto& A = f.algebra;
      const ExactMatrix Q = tensor_matrix(m_bt(A));
      const auto mods = tangle_family(f);
      for (const auto& X : mods)
        for (const auto& Y : mods) {
          CAPTURE(X.label);
          CAPTURE(Y.label);
          CHECK(j_end(A, Y).matrix * Q * iota(A, X).matrix == hopf_tangle(A, X, Y).matrix);
        }
    }
  }

  TEST_CASE("invariants and coinvariants") {
    const auto A = preset("double_Z2").algebra;
    const AModule L = coadjoint_module(A);
    for (const auto& v : coend_invariants(A)) {
      for (int i = 0; i < A.dim; ++i) {
        auto image = L.action[i] * v;
        for (int k = 0; k < A.dim; ++k) image[k] -= A.counit[i] * v[k];
        for (const auto& s : image) CHECK(s.is_zero());
      }
    }
    CHECK(coend_invariants(A).size() == coend_coinvariants(A).size());
  }
}
