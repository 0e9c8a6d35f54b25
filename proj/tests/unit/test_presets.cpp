#include <doctest.h>

#include <algorithm>

#include "qhopf/presets.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

TEST_SUITE("presets") {
  TEST_CASE("catalogue") {
    const auto names = preset_names();
    CHECK(names == std::vector<std::string>{"double_Z2", "group_Z2_trivialR", "trivial", "twisted_double_Z2"});
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK_THROWS_AS(preset("no_such_algebra"), std::invalid_argument);
    CHECK_THROWS_AS(preset_source("no_such_algebra"), std::invalid_argument);
  }

  TEST_CASE("shapes") {
    CHECK(preset("trivial").algebra.dim == 1);
    const auto tw = preset("twisted_double_Z2");
    CHECK(tw.algebra.order == 4);
    CHECK(tw.algebra.phi != one(tw.algebra, 3));
    CHECK(tw.expects("factorisable"));
    CHECK(preset("double_Z2").expects("factorisable"));
    CHECK_FALSE(preset("group_Z2_trivialR").expects("factorisable"));
    for (const auto& name : preset_names()) {
      const auto f = preset(name);
      CHECK(f.algebra.has_ribbon());
      CHECK(f.has_flag("char0"));
      CHECK(f.algebra.name == name);
      CHECK(preset_source(name).find("qha 1") != std::string::npos);
    }
  }

  TEST_CASE("every nonzero site mutation breaks an axiom") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto A = preset(name).algebra;
      const auto sites = nonzero_sites(A);
      CHECK_FALSE(sites.empty());
      for (const auto& site : sites) {
        CAPTURE(site.str());
        // A random nonzero perturbation, and the one that zeroes the entry.
        Scalar delta;
        while (delta.is_zero()) delta = random_scalar(A.order);
        for (const Scalar& d : {delta, Scalar(1)}) {
          const AxiomReport r = validate(mutate(A, site, d));
          const AxiomCheck* fail = r.first_failure();
          REQUIRE(fail != nullptr);
          CHECK_FALSE(fail->witness.empty());
        }
      }
    }
  }

  TEST_CASE("mutation changes exactly one entry") {
    const auto A = preset("twisted_double_Z2").algebra;
    for (const auto& site : nonzero_sites(A)) {
      if (site.section != "R") continue;
      const auto B = mutate(A, site, Scalar(3));
      const Tensor diff = B.R - A.R;
      int nonzero = 0;
      diff.for_each_nonzero([&](const Index&, const Scalar& v) {
        ++nonzero;
        CHECK(v == Scalar(3));
      });
      CHECK(nonzero == 1);
      if (auto inv = invert(B, B.R)) CHECK(B.R_inv == *inv);
    }
  }

  TEST_CASE("sites are listed in a fixed order") {
    const auto A = preset("double_Z2").algebra;
    const auto a = nonzero_sites(A), b = nonzero_sites(A);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
  }
}
