// Exact elements of the cyclotomic fields Q(zeta_m).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhopf {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_scalar; `column` is 0-based into the parsed text.
class LiteralError : public std::runtime_error {
 public:
  LiteralError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column(column) {}
  std::size_t column;
};

struct CyclotomicField;  // cached Phi_m data, never freed

const CyclotomicField* cyclotomic_field(int m);
int euler_phi(int m);

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1).
///
/// Binary operations between different orders lift both operands to
/// Q(zeta_lcm). Equality is exact and independent of the stored order.
class Scalar {
 public:
  Scalar();
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q, int m = 1);

  static Scalar zeta(int m, long power = 1);
  static Scalar from_coefficients(int m, std::vector<mpq_class> coeffs);

  int order() const;
  const std::vector<mpq_class>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only valid when is_rational().
  const mpq_class& rational() const { return c_[0]; }

  Scalar embed(int target_order) const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // a += b * c without a temporary when all orders agree.
  void add_product(const Scalar& b, const Scalar& c);

  /// Canonical literal in the generator z of order `m` (0 = own order).
  std::string str(int m = 0) const;

 private:
  const CyclotomicField* f_;
  std::vector<mpq_class> c_;

  void lift_to(const CyclotomicField* g);
  void reduce_product(std::vector<mpq_class>& prod);
};

/// Parses `1/2*z^3 - 1`, `(1+z)/2`, `-z^2` etc. in Q(zeta_m).
Scalar parse_scalar(std::string_view text, int m);

}  // namespace qhopf
