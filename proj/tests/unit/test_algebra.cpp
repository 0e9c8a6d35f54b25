#include <doctest.h>

#include "qhopf/algebra.hpp"
#include "qhopf/presets.hpp"
#include "qhopf/repcat.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const AxiomCheck* failure_named(const AxiomReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (!c.passed && c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("presets satisfy every axiom") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const AxiomReport r = validate(preset(name).algebra);
      CHECK(r.all_passed());
      CHECK(r.first_failure() == nullptr);
      CHECK(r.find("three_cocycle") != nullptr);
    }
  }

  TEST_CASE("zero mutation keeps the axioms") {
    const auto A = preset("double_Z2").algebra;
    for (const auto& site : nonzero_sites(A)) CHECK(validate(mutate(A, site, Scalar(0))).all_passed());
  }

  TEST_CASE("R mutation breaks a hexagon") {
    const auto A = preset("double_Z2").algebra;
    int tried = 0;
    for (const auto& site : nonzero_sites(A)) {
      if (site.section != "R") continue;
      const AxiomReport r = validate(mutate(A, site, Scalar(1)));
      CAPTURE(site.str());
      CHECK(failure_named(r, "hexagon") != nullptr);
      ++tried;
    }
    CHECK(tried > 0);
  }

  TEST_CASE("Phi mutation breaks the 3-cocycle condition") {
    const auto A = preset("twisted_double_Z2").algebra;
    int tried = 0;
    for (const auto& site : nonzero_sites(A)) {
      if (site.section != "phi") continue;
      const AxiomReport r = validate(mutate(A, site, Scalar(1)));
      CAPTURE(site.str());
      const AxiomCheck* c = failure_named(r, "three_cocycle");
      REQUIRE(c != nullptr);
      CHECK_FALSE(c->witness.empty());
      ++tried;
    }
    CHECK(tried > 0);
  }

  TEST_CASE("Drinfeld elements") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto A = preset(name).algebra;
      const DrinfeldElement d = drinfeld_element(A);
      CHECK(prod(A, d.u, d.u_inv) == one(A));
      CHECK(d.u_tilde == antipode(A, d.u_inv));
      // S^2(a) = u a u^-1
      for (int i = 0; i < A.dim; ++i) {
        const Tensor e = basis_element(A, i);
        CHECK(antipode(A, antipode(A, e)) == prod(A, {&d.u, &e, &d.u_inv}));
      }
      if (A.has_ribbon()) {
        const Tensor& v = *A.ribbon;
        const Tensor Su = antipode(A, d.u);
        CHECK(prod(A, v, v) == prod(A, d.u, Su));
        CHECK(ribbon_elements(A).u == d.u);
      }
    }
  }

  TEST_CASE("Drinfeld twist conjugates the antipode") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto A = preset(name).algebra;
      const DrinfeldTwist t = drinfeld_twist(A);
      CHECK(prod(A, t.f, t.f_inv) == one(A, 2));
      CHECK(prod(A, t.f_inv, t.f) == one(A, 2));
    }
  }

  TEST_CASE("monodromy of the trivial R-matrix") {
    const auto A = preset("group_Z2_trivialR").algebra;
    CHECK(monodromy(A) == one(A, 2));
    const auto D = preset("double_Z2").algebra;
    CHECK(monodromy(D) != one(D, 2));
  }

  TEST_CASE("inverses of random elements") {
    const auto A = preset("twisted_double_Z2").algebra;
    int found = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const Tensor a = random_tensor(A.dim, 1, 4);
      const auto inv = invert(A, a);
      if (!inv) continue;
      ++found;
      CHECK(prod(A, a, *inv) == one(A));
      CHECK(prod(A, *inv, a) == one(A));
    }
    CHECK(found > 0);
    CHECK_FALSE(invert(A, Tensor(A.dim, 1)).has_value());
  }

  TEST_CASE("antipode inverse") {
    const auto A = preset("twisted_double_Z2").algebra;
    for (int trial = 0; trial < 5; ++trial) {
      const Tensor a = random_tensor(A.dim, 1, 4);
      CHECK(antipode_inverse(A, antipode(A, a)) == a);
    }
    CHECK((antipode_inverse_matrix(A) * A.antipode).is_identity());
  }

  TEST_CASE("solved inverses match stored ones") {
    const auto A = preset("twisted_double_Z2").algebra;
    QuasiHopfAlgebra B = A;
    B.phi_inv = Tensor();
    B.R_inv = Tensor();
    B.ribbon_inv.reset();
    B.computed.clear();
    complete_inverses(B);
    CHECK(B.phi_inv == A.phi_inv);
    CHECK(B.R_inv == A.R_inv);
    CHECK(B.ribbon_inv == A.ribbon_inv);
    CHECK(B.computed.size() == 3);
  }

  TEST_CASE("Hopf detection") {
    CHECK(preset("double_Z2").algebra.is_hopf());
    CHECK_FALSE(preset("twisted_double_Z2").algebra.is_hopf());
  }
}
