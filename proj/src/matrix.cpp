#include "qhopf/matrix.hpp"

#include <stdexcept>

#include "qhopf/parallel.hpp"

namespace qhopf {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Scalar>& v) {
  ExactMatrix m(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

ExactMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, int rows) {
  ExactMatrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
  return m;
}

std::vector<Scalar> ExactMatrix::col(int c) const {
  std::vector<Scalar> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Scalar> ExactMatrix::row(int r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

void ExactMatrix::set_col(int c, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("column length mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  // Sparse rows of b, gathered once.
  std::vector<std::vector<int>> nz(b.rows_);
  for (int k = 0; k < b.rows_; ++k)
    for (int j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  parallel_for(static_cast<std::size_t>(a.rows_), [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j : nz[k]) c(i, j).add_product(x, b(k, j));
    }
  });
  return c;
}

std::vector<Scalar> operator*(const ExactMatrix& a, const std::vector<Scalar>& v) {
  if (a.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Scalar> out(a.rows_);
  for (int k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (int i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) out[i].add_product(a(i, k), v[k]);
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && !first_difference(a, b);
}

std::optional<std::pair<int, int>> first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return std::make_pair(-1, -1);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (a(i, j) != b(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          const Scalar& y = b(p, q);
          if (!y.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
    }
  return k;
}

std::vector<int> rref(ExactMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const ExactMatrix& m) {
  ExactMatrix t = m;
  return static_cast<int>(rref(t).size());
}

std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m) {
  ExactMatrix t = m;
  std::vector<int> piv = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols());
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace qhopf
