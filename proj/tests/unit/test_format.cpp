#include <doctest.h>

#include <fstream>

#include "qhopf/format.hpp"
#include "qhopf/presets.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
  return s;
}

void same_algebra(const AlgebraFile& a, const AlgebraFile& b) {
  const auto &A = a.algebra, &B = b.algebra;
  CHECK(A.name == B.name);
  CHECK(A.dim == B.dim);
  CHECK(A.order == B.order);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) CHECK(A.mult.coefficient(i, j, k) == B.mult.coefficient(i, j, k));
  CHECK(A.counit == B.counit);
  CHECK(A.coproduct == B.coproduct);
  CHECK(A.antipode == B.antipode);
  CHECK(A.phi == B.phi);
  CHECK(A.phi_inv == B.phi_inv);
  CHECK(A.alpha == B.alpha);
  CHECK(A.beta == B.beta);
  CHECK(A.R == B.R);
  CHECK(A.R_inv == B.R_inv);
  CHECK(A.ribbon == B.ribbon);
  CHECK(a.flags == b.flags);
  CHECK(a.expect == b.expect);
  REQUIRE(a.simples.size() == b.simples.size());
  for (std::size_t s = 0; s < a.simples.size(); ++s) {
    CHECK(a.simples[s].label == b.simples[s].label);
    CHECK(a.simples[s].action == b.simples[s].action);
  }
}

int error_line(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

const std::string& base() { return preset_source("group_Z2_trivialR"); }

}  // namespace

TEST_SUITE("format") {
  TEST_CASE("presets round trip") {
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const AlgebraFile f = preset(name);
      const std::string text = serialise(f);
      const AlgebraFile g = parse_algebra(text);
      same_algebra(f, g);
      CHECK(serialise(g) == text);
    }
  }

  TEST_CASE("round trip of random data") {
    // Structure constants need not satisfy the axioms to round trip.
    for (int trial = 0; trial < 10; ++trial) {
      AlgebraFile f = preset("twisted_double_Z2");
      f.algebra.R = random_tensor(f.algebra.dim, 2, 4);
      f.algebra.phi = random_tensor(f.algebra.dim, 3, 4);
      const AlgebraFile g = parse_algebra(serialise(f));
      same_algebra(f, g);
    }
  }

  TEST_CASE("zero entries are dropped") {
    const std::string text = replace_once(base(), "[R]\n0 0 = 1\n", "[R]\n0 0 = 1\n1 1 = z^0 - 1\n");
    const AlgebraFile f = parse_algebra(text);
    CHECK(serialise(f) == serialise(preset("group_Z2_trivialR")));
  }

  TEST_CASE("field order embedding") {
    const AlgebraFile f = preset("double_Z2", 4);
    CHECK(f.algebra.order == 4);
    CHECK(validate(f.algebra).all_passed());
    CHECK_THROWS_AS(preset("twisted_double_Z2", 6), ParseError);
    CHECK(preset("twisted_double_Z2", 8).algebra.order == 8);
  }

  TEST_CASE("missing sections") {
    const std::string no_mult_entries = replace_once(base(), "0 0 0 = 1\n0 1 1 = 1\n1 0 1 = 1\n1 1 0 = 1\n", "");
    CHECK_THROWS_WITH_AS(parse_algebra(no_mult_entries), doctest::Contains("missing mandatory section [mult]"),
                         ParseError);
    const std::string no_R = replace_once(base(), "[R]\n0 0 = 1\n", "");
    CHECK_THROWS_WITH_AS(parse_algebra(no_R), doctest::Contains("[R]"), ParseError);
    CHECK_THROWS_AS(parse_algebra(""), ParseError);
  }

  TEST_CASE("errors carry line and column") {
    const std::string bad_index = replace_once(base(), "[counit]\n0 = 1", "[counit]\n2 = 1");
    CHECK(error_line(bad_index) == 18);
    try {
      parse_algebra(replace_once(base(), "[alpha]\n0 = 1", "[alpha]\n0 = 1 +"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column > 4);
      CHECK(std::string(e.what()).find("bad scalar literal") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra(replace_once(base(), "[beta]", "[gamma]")), ParseError);
    CHECK_THROWS_AS(parse_algebra(replace_once(base(), "dim 2", "dim two")), ParseError);
    CHECK_THROWS_AS(parse_algebra(replace_once(base(), "[counit]\n0 = 1", "[counit]\n0 = 1\n0 = 2")), ParseError);
    CHECK_THROWS_AS(parse_algebra(replace_once(base(), "[R]\n0 0 = 1", "[R]\n0 = 1")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("/nonexistent/file.qha"), ParseError);
  }

  TEST_CASE("scalars normalise in the declared field") {
    std::string text = replace_once(preset_source("twisted_double_Z2"), "[alpha]\n0 = 1", "[alpha]\n0 = z^4");
    CHECK(parse_algebra(text).algebra.alpha == preset("twisted_double_Z2").algebra.alpha);
  }

  TEST_CASE("inverses are solved when absent") {
    const AlgebraFile f = parse_algebra(base());
    CHECK(f.algebra.R_inv == f.algebra.R);
    CHECK_FALSE(f.algebra.computed.empty());
  }

  TEST_CASE("files on disk") {
    const AlgebraFile f = parse_algebra_file(data_path("double_sweedler.qha"));
    CHECK(f.algebra.dim == 16);
    CHECK_FALSE(f.algebra.has_ribbon());
    CHECK(f.simples.empty());
    CHECK(f.has_flag("char0"));
    CHECK(f.expects("factorisable"));
  }
}
