#include <doctest.h>

#include "qhopf/fusion.hpp"
#include "qhopf/presets.hpp"
#include "qhopf/repcat.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

/// The table is the multiplication of a group in which every element squares to the unit.
bool is_klein_four(const FusionTable& t) {
  const std::size_t n = t.labels.size();
  if (n != 4) return false;
  std::vector<std::vector<std::size_t>> product(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      int hits = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (t.N[u][v][w] == 1) {
          ++hits;
          product[u][v] = w;
        } else if (t.N[u][v][w] != 0) {
          return false;
        }
      }
      if (hits != 1) return false;
    }
  for (std::size_t u = 0; u < n; ++u) {
    if (product[0][u] != u || product[u][0] != u || product[u][u] != 0) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (product[u][v] != product[v][u]) return false;
      for (std::size_t w = 0; w < n; ++w)
        if (product[product[u][v]][w] != product[u][product[v][w]]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("fusion") {
  TEST_CASE("simple sets are complete") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const SimpleSet S = make_simple_set(f.algebra, f.simples);
      CHECK(S.radical_dim == 0);
      CHECK(S.characters_independent);
      CHECK(S.complete);
      const auto cls = grothendieck_class(f.algebra, regular_module(f.algebra), S);
      for (std::size_t s = 0; s < f.simples.size(); ++s) CHECK(cls[s] == f.simples[s].dim);
    }
  }

  TEST_CASE("incomplete simple sets are reported") {
    const AlgebraFile f = preset("double_Z2");
    const SimpleSet S = make_simple_set(f.algebra, {f.simples.begin(), f.simples.begin() + 2});
    CHECK_FALSE(S.complete);
    CHECK_THROWS(grothendieck_class(f.algebra, regular_module(f.algebra), S));
  }

  TEST_CASE("characters") {
    const AlgebraFile f = preset("double_Z2");
    const AModule reg = regular_module(f.algebra);
    const Vector chi = character(f.algebra, reg);
    CHECK(chi[0] == Scalar(4));
    const Vector sum = character(f.algebra, direct_sum(reg, f.simples[1]));
    const Vector part = character(f.algebra, f.simples[1]);
    for (int i = 0; i < f.algebra.dim; ++i) CHECK(sum[i] == chi[i] + part[i]);
  }

  TEST_CASE("doubles fuse like the Klein four-group") {
    for (const char* name : {"double_Z2", "twisted_double_Z2"}) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const auto& A = f.algebra;
      const SimpleSet S = make_simple_set(A, f.simples);
      const FusionTable t = verlinde_fusion(A, S, true);
      CHECK(t.oracle_run);
      CHECK(t.matches_oracle);
      CHECK(t.N == t.oracle);
      CHECK(t.unit_column);
      CHECK(t.symmetric);
      CHECK(is_klein_four(t));
      const FusionTable no_oracle = verlinde_fusion(A, S, false);
      CHECK_FALSE(no_oracle.oracle_run);
      CHECK(no_oracle.N == t.N);
    }
  }

  TEST_CASE("chi equals S_Z of phi") {
    for (const char* name : {"double_Z2", "twisted_double_Z2"}) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const auto& A = f.algebra;
      const ModularData md = modular_data(A, coend_maps(A));
      REQUIRE(md.sl2z.has_value());
      REQUIRE(md.cointegral.c.has_value());
      for (const auto& V : f.simples) {
        CAPTURE(V.label);
        const Vector phi = phi_central(A, V, *md.cointegral.c);
        const Vector chi = chi_central(A, V);
        CHECK(is_central(A, phi));
        CHECK(is_central(A, chi));
        CHECK(md.sl2z->S_Z_on_A * phi == chi);
        Vector k_phi_dual = phi_central(A, dual_module(A, V), *md.cointegral.c);
        for (auto& x : k_phi_dual) x *= md.integral.k;
        CHECK(md.sl2z->S_Z_on_A * chi == k_phi_dual);
      }
    }
  }

  TEST_CASE("symmetric categories fail the chi expansion") {
    // With R = 1 (x) 1 every chi_V is a multiple of the unit, so the chi
    // values are dependent.
    const AlgebraFile f = preset("group_Z2_trivialR");
    const SimpleSet S = make_simple_set(f.algebra, f.simples);
    CHECK_THROWS(verlinde_fusion(f.algebra, S, true));
  }
}
