#include "qhopf/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qhopf {

struct CyclotomicField {
  int m;
  int phi;
  std::vector<mpq_class> poly;  // Phi_m, monic, low degree first
  // reduced[k - phi] = x^k mod Phi_m for phi <= k <= 2 phi - 2
  std::vector<std::vector<mpq_class>> reduced;
  // powers[k] = x^k mod Phi_m for 0 <= k < m
  std::vector<std::vector<mpq_class>> powers;
};

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_div_exact(Poly num, const Poly& den) {
  trim(num);
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, 0);
  for (int i = static_cast<int>(num.size()) - static_cast<int>(den.size()); i >= 0; --i) {
    mpq_class coef = num[i + den.size() - 1] / den.back();
    q[i] = coef;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
  }
  trim(q);
  return q;
}

Poly reduce_mod(Poly p, const Poly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    mpq_class coef = p[k];
    for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= coef * mod[j];
  }
  p.resize(d);
  return p;
}

std::unique_ptr<CyclotomicField> build_field(int m) {
  auto f = std::make_unique<CyclotomicField>();
  f->m = m;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_exact(p, cyclotomic_field(d)->poly);
  }
  f->poly = p;
  f->phi = static_cast<int>(p.size()) - 1;
  for (int k = f->phi; k <= 2 * f->phi - 2; ++k) {
    Poly x(k + 1, 0);
    x[k] = 1;
    f->reduced.push_back(reduce_mod(x, p));
  }
  for (int k = 0; k < m; ++k) {
    Poly x(std::max(k + 1, f->phi), 0);
    x[k] = 1;
    f->powers.push_back(reduce_mod(x, p));
  }
  return f;
}

}  // namespace

const CyclotomicField* cyclotomic_field(int m) {
  if (m < 1) throw ArithmeticError("cyclotomic order must be positive");
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second.get();
  auto f = build_field(m);
  const CyclotomicField* out = f.get();
  cache.emplace(m, std::move(f));
  return out;
}

int euler_phi(int m) { return cyclotomic_field(m)->phi; }

namespace {
const CyclotomicField* rationals() {
  static const CyclotomicField* q = cyclotomic_field(1);
  return q;
}
}  // namespace

Scalar::Scalar() : f_(rationals()), c_(1, 0) {}
Scalar::Scalar(long v) : f_(rationals()), c_(1, v) {}
Scalar::Scalar(const mpq_class& q, int m) : f_(cyclotomic_field(m)), c_(f_->phi, 0) {
  c_[0] = q;
  c_[0].canonicalize();
}

Scalar Scalar::zeta(int m, long power) {
  Scalar s(0, m);
  long k = ((power % m) + m) % m;
  s.c_ = s.f_->powers[k];
  return s;
}

Scalar Scalar::from_coefficients(int m, std::vector<mpq_class> coeffs) {
  Scalar s(0, m);
  if (static_cast<int>(coeffs.size()) > s.f_->phi) {
    s.reduce_product(coeffs);
  } else {
    coeffs.resize(s.f_->phi, 0);
  }
  s.c_ = std::move(coeffs);
  for (auto& q : s.c_) q.canonicalize();
  return s;
}

int Scalar::order() const { return f_->m; }

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && c_[0] == 1; }

void Scalar::lift_to(const CyclotomicField* g) {
  if (g == f_) return;
  if (g->m % f_->m != 0) throw ArithmeticError("incompatible cyclotomic orders");
  const int step = g->m / f_->m;
  std::vector<mpq_class> out(g->phi, 0);
  for (int j = 0; j < f_->phi; ++j) {
    if (c_[j] == 0) continue;
    const auto& pw = g->powers[(j * step) % g->m];
    for (int i = 0; i < g->phi; ++i)
      if (pw[i] != 0) out[i] += c_[j] * pw[i];
  }
  f_ = g;
  c_ = std::move(out);
}

Scalar Scalar::embed(int target_order) const {
  Scalar s = *this;
  s.lift_to(cyclotomic_field(target_order));
  return s;
}

void Scalar::reduce_product(std::vector<mpq_class>& prod) {
  const int phi = f_->phi;
  for (int k = static_cast<int>(prod.size()) - 1; k >= phi; --k) {
    if (prod[k] == 0) continue;
    const auto& r = f_->reduced[k - phi];
    for (int i = 0; i < phi; ++i)
      if (r[i] != 0) prod[i] += prod[k] * r[i];
  }
  prod.resize(phi);
}

namespace {
const CyclotomicField* common_field(const CyclotomicField* a, const CyclotomicField* b) {
  if (a == b) return a;
  return cyclotomic_field(std::lcm(a->m, b->m));
}
}  // namespace

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& q : s.c_) q = -q;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.f_ == f_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const CyclotomicField* g = common_field(f_, o.f_);
  lift_to(g);
  Scalar t = o;
  t.lift_to(g);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += t.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.f_ != f_) {
    const CyclotomicField* g = common_field(f_, o.f_);
    lift_to(g);
    Scalar t = o;
    t.lift_to(g);
    return *this *= t;
  }
  if (f_->phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  const int phi = f_->phi;
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  reduce_product(prod);
  c_ = std::move(prod);
  return *this;
}

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  if (f_->phi == 1 && b.f_ == f_ && c.f_ == f_) {
    c_[0] += b.c_[0] * c.c_[0];
    return;
  }
  *this += b * c;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  const CyclotomicField* g = common_field(a.f_, b.f_);
  Scalar x = a, y = b;
  x.lift_to(g);
  y.lift_to(g);
  return x.c_ == y.c_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  const int phi = f_->phi;
  if (phi == 1) {
    Scalar s = *this;
    s.c_[0] = 1 / c_[0];
    return s;
  }
  // Solve (multiplication by *this) x = 1 in the power basis.
  std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phi + 1, 0));
  for (int j = 0; j < phi; ++j) {
    Scalar basis = zeta(f_->m, j);
    Scalar col = *this * basis;
    for (int i = 0; i < phi; ++i) a[i][j] = col.c_[i];
  }
  a[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (int k = col; k <= phi; ++k) a[col][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class fac = a[r][col];
      for (int k = col; k <= phi; ++k) a[r][k] -= fac * a[col][k];
    }
  }
  Scalar s(0, f_->m);
  for (int i = 0; i < phi; ++i) s.c_[i] = a[i][phi];
  return s;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1, 1);
  result.lift_to(f_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::str(int m) const {
  if (m != 0 && m != f_->m) {
    if (m % f_->m == 0) return embed(m).str();
    if (is_rational()) return Scalar(c_[0], m).str();
    throw ArithmeticError("scalar does not lie in the requested field");
  }
  std::string out;
  for (int k = 0; k < f_->phi; ++k) {
    const mpq_class& q = c_[k];
    if (q == 0) continue;
    mpq_class mag = abs(q);
    const bool neg = q < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view s, int m) : s_(s), m_(m) {}

  Scalar run() {
    skip();
    if (pos_ >= s_.size()) fail("empty scalar literal");
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  int m_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw LiteralError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero in literal");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Scalar base = primary();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      long e = integer();
      if (neg) {
        if (base.is_zero()) fail("zero to a negative power");
        e = -e;
      }
      return base.pow(e);
    }
    return base;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of literal");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      return Scalar::zeta(m_, 1);
    }
    if (c >= '0' && c <= '9') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return Scalar(mpq_class(n), m_);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, int m) { return LiteralParser(text, m).run(); }

}  // namespace qhopf
