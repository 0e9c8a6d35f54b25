// Elements of A^{(x)k}, k <= 4, as dense coefficient arrays.
#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qhopf/matrix.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

constexpr int kMaxLegs = 4;
using Index = std::array<int, kMaxLegs>;

class Tensor;

/// Structure constants e_i e_j = sum_k c[i][j][k] e_k, stored sparsely.
class MultTable {
 public:
  MultTable() = default;
  explicit MultTable(int dim) : dim_(dim), products_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * dim_ + j];
  }
  Scalar coefficient(int i, int j, int k) const;
  void set(int i, int j, int k, const Scalar& v);

 private:
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, Scalar>>> products_;
};

/// Delta(e_i) for each i, each a 2-leg tensor.
using CoproductTable = std::vector<Tensor>;
/// epsilon(e_i).
using CounitTable = std::vector<Scalar>;

class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, int legs);

  static Tensor unit(int dim, int legs);
  static Tensor basis(int dim, std::initializer_list<int> idx);
  static Tensor from_vector(const std::vector<Scalar>& v);

  int dim() const { return dim_; }
  int legs() const { return legs_; }
  std::size_t size() const { return c_.size(); }

  Scalar& operator[](std::size_t flat) { return c_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return c_[flat]; }
  Scalar& at(std::initializer_list<int> idx);
  const Scalar& at(std::initializer_list<int> idx) const;

  std::size_t flat(const Index& idx) const;
  Index unflat(std::size_t flat) const;

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const;

  /// Calls fn(index, coefficient) for every nonzero entry, in flat order.
  void for_each_nonzero(const std::function<void(const Index&, const Scalar&)>& fn) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// Index of the first coefficient where a and b differ.
  friend std::optional<Index> first_difference(const Tensor& a, const Tensor& b);

 private:
  int dim_ = 0;
  int legs_ = 0;
  std::vector<Scalar> c_;
};

/// Product in A^{(x)k}, leg by leg.
Tensor mul(const MultTable& c, const Tensor& s, const Tensor& t);
/// Product of several tensors, left to right.
Tensor mul(const MultTable& c, std::initializer_list<const Tensor*> factors);

/// Applies the linear map f (column j = f(e_j)) to leg j (1-based).
Tensor leg_map(const Tensor& t, int leg, const ExactMatrix& f);
Tensor coproduct_leg(const Tensor& t, int leg, const CoproductTable& delta);
Tensor counit_leg(const Tensor& t, int leg, const CounitTable& eps);

/// Source leg i goes to position sigma[i-1] (all 1-based).
/// permute(t, s o u) == permute(permute(t, u), s).
Tensor permute(const Tensor& t, const std::vector<int>& sigma);
/// Subscript notation: slot p of the result holds source leg legs[p-1],
/// so subscript(Phi, {2,3,1}) = sum Phi_2 (x) Phi_3 (x) Phi_1.
Tensor subscript(const Tensor& t, const std::vector<int>& legs);
/// Places the legs of t at the given strictly increasing positions of a
/// `target`-leg tensor, with units elsewhere: embed(R, 3, {1,3}) = R_13.
Tensor embed(const Tensor& t, int target, const std::vector<int>& positions);
/// Like embed, but positions may be in any order: place(R, 3, {3,1}) = R_31.
Tensor place(const Tensor& t, int target, const std::vector<int>& positions);

/// a (x) b with legs concatenated.
Tensor outer(const Tensor& a, const Tensor& b);

}  // namespace qhopf
