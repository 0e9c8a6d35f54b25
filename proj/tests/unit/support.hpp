// Random generators for property tests and small shared helpers.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/matrix.hpp"
#include "qhopf/scalar.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20261016);
  return gen;
}

inline long small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline mpq_class small_rational() {
  long den = small_int(1, 5);
  return mpq_class(small_int(-6, 6), den);
}

/// Random element of Q(zeta_m), sometimes zero.
inline Scalar random_scalar(int m = 1, int zero_weight = 0) {
  if (zero_weight > 0 && small_int(0, zero_weight) == 0) return Scalar();
  std::vector<mpq_class> c(euler_phi(m));
  for (auto& x : c) x = small_rational();
  return Scalar::from_coefficients(m, c);
}

inline std::vector<Scalar> random_vector(int n, int m = 1) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = random_scalar(m, 3);
  return v;
}

inline ExactMatrix random_matrix(int rows, int cols, int m = 1) {
  ExactMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a(r, c) = random_scalar(m, 3);
  return a;
}

/// Matrix of the given rank as a product of random factors.
inline ExactMatrix random_rank_matrix(int rows, int cols, int r) {
  ExactMatrix left(rows, r), right(r, cols);
  do {
    left = random_matrix(rows, r);
    right = random_matrix(r, cols);
  } while (rank(left) < r || rank(right) < r);
  return left * right;
}

inline Tensor random_tensor(int dim, int legs, int m = 1) {
  Tensor t(dim, legs);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_scalar(m, 2);
  return t;
}

inline std::string data_path(const std::string& file) { return std::string(QHOPF_TEST_DATA_DIR) + "/" + file; }

}  // namespace qhopf::testing
