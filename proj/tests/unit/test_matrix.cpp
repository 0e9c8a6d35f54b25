#include <doctest.h>

#include "qhopf/matrix.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

TEST_SUITE("matrix") {
  TEST_CASE("rank of constructed matrices") {
    for (int trial = 0; trial < 15; ++trial) {
      const int rows = small_int(1, 6), cols = small_int(1, 6);
      const int r = small_int(0, std::min(rows, cols));
      const ExactMatrix m = r == 0 ? ExactMatrix(rows, cols) : random_rank_matrix(rows, cols, r);
      CHECK(rank(m) == r);
      CHECK(rank(m.transpose()) == r);
      const auto ker = kernel(m);
      CHECK(static_cast<int>(ker.size()) == cols - r);
      for (const auto& v : ker) {
        const auto image = m * v;
        for (const auto& x : image) CHECK(x.is_zero());
      }
    }
  }

  TEST_CASE("solve and inverse") {
    for (int trial = 0; trial < 15; ++trial) {
      const int n = small_int(1, 5);
      const ExactMatrix m = random_rank_matrix(n, n, n);
      const auto inv = inverse(m);
      REQUIRE(inv.has_value());
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
      const auto x = random_vector(n);
      const auto sol = solve(m, m * x);
      REQUIRE(sol.has_value());
      CHECK(*sol == x);
    }
    ExactMatrix singular(2, 2);
    singular(0, 0) = Scalar(1);
    CHECK_FALSE(inverse(singular).has_value());
    CHECK_FALSE(solve(singular, {Scalar(0), Scalar(1)}).has_value());
  }

  TEST_CASE("kronecker products") {
    for (int trial = 0; trial < 10; ++trial) {
      const ExactMatrix a = random_matrix(2, 3), b = random_matrix(3, 2);
      const ExactMatrix c = random_matrix(3, 2), d = random_matrix(2, 3);
      CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
      const ExactMatrix k = kron(a, b);
      CHECK(k(1 * 3 + 2, 0 * 2 + 1) == a(1, 0) * b(2, 1));
    }
  }

  TEST_CASE("rref is idempotent and reports pivots") {
    ExactMatrix m = random_rank_matrix(4, 5, 3);
    const auto pivots = rref(m);
    CHECK(pivots.size() == 3);
    ExactMatrix again = m;
    CHECK(rref(again) == pivots);
    CHECK(again == m);
  }

  TEST_CASE("first difference locates entries") {
    const ExactMatrix a = random_matrix(3, 3);
    ExactMatrix b = a;
    CHECK_FALSE(first_difference(a, b).has_value());
    b(2, 1) += Scalar(1);
    const auto d = first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(d->first == 2);
    CHECK(d->second == 1);
  }

  TEST_CASE("columns round trip") {
    const auto v = random_vector(4), w = random_vector(4);
    const ExactMatrix m = from_columns({v, w}, 4);
    CHECK(m.col(0) == v);
    CHECK(m.col(1) == w);
    CHECK(m.transpose().row(1) == w);
  }
}
