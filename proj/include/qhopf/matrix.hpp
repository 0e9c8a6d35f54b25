// Dense exact matrices over Scalar.
#pragma once

#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static ExactMatrix column(const std::vector<Scalar>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Scalar> col(int c) const;
  std::vector<Scalar> row(int r) const;
  void set_col(int c, const std::vector<Scalar>& v);

  ExactMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Scalar& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
  friend ExactMatrix operator*(const Scalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend std::vector<Scalar> operator*(const ExactMatrix& a, const std::vector<Scalar>& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  /// First (row, col) where the two matrices differ, if any.
  friend std::optional<std::pair<int, int>> first_difference(const ExactMatrix& a, const ExactMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// Kronecker product; row index of the result is r_a * b.rows() + r_b.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(ExactMatrix& m);
int rank(const ExactMatrix& m);
std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m);
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& b);
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Matrix whose columns are the given vectors.
ExactMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, int rows);

}  // namespace qhopf
