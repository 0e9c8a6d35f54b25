#include "qhopf/algebra.hpp"

#include <stdexcept>

namespace qhopf {

bool QuasiHopfAlgebra::is_hopf() const {
  return phi == Tensor::unit(dim, 3) && alpha == Tensor::unit(dim, 1) && beta == Tensor::unit(dim, 1);
}

Tensor one(const QuasiHopfAlgebra& A, int legs) { return Tensor::unit(A.dim, legs); }

Tensor basis_element(const QuasiHopfAlgebra& A, int i) { return Tensor::basis(A.dim, {i}); }

Tensor prod(const QuasiHopfAlgebra& A, const Tensor& a, const Tensor& b) { return mul(A.mult, a, b); }

Tensor prod(const QuasiHopfAlgebra& A, std::initializer_list<const Tensor*> factors) {
  return mul(A.mult, factors);
}

Tensor antipode(const QuasiHopfAlgebra& A, const Tensor& a) {
  Tensor t = a;
  for (int l = 1; l <= a.legs(); ++l) t = leg_map(t, l, A.antipode);
  return t;
}

ExactMatrix antipode_inverse_matrix(const QuasiHopfAlgebra& A) {
  auto inv = inverse(A.antipode);
  if (!inv) throw std::runtime_error("antipode is not invertible");
  return *inv;
}

Tensor antipode_inverse(const QuasiHopfAlgebra& A, const Tensor& a) {
  const ExactMatrix sinv = antipode_inverse_matrix(A);
  Tensor t = a;
  for (int l = 1; l <= a.legs(); ++l) t = leg_map(t, l, sinv);
  return t;
}

Tensor coproduct(const QuasiHopfAlgebra& A, const Tensor& a) { return coproduct_leg(a, 1, A.coproduct); }

Tensor coproduct_op(const QuasiHopfAlgebra& A, const Tensor& a) { return permute(coproduct(A, a), {2, 1}); }

Scalar counit(const QuasiHopfAlgebra& A, const Tensor& a) {
  Scalar s;
  for (int i = 0; i < A.dim; ++i)
    if (!a[i].is_zero()) s.add_product(a[i], A.counit[i]);
  return s;
}

ExactMatrix left_multiplication(const QuasiHopfAlgebra& A, const Tensor& t) {
  const int n = static_cast<int>(t.size());
  ExactMatrix L(n, n);
  for (int j = 0; j < n; ++j) {
    Tensor e(A.dim, t.legs());
    e[j] = 1;
    Tensor c = prod(A, t, e);
    for (int i = 0; i < n; ++i) L(i, j) = c[i];
  }
  return L;
}

std::optional<Tensor> invert(const QuasiHopfAlgebra& A, const Tensor& t) {
  const Tensor u = one(A, t.legs());
  // Scalar multiples of the unit (Phi of Hopf data, trivial R) skip the
  // dense solve, which is dim^k x dim^k.
  if (!t[0].is_zero() && t == u * t[0]) return u * t[0].inverse();
  auto x = solve(left_multiplication(A, t), u.coeffs());
  if (!x) return std::nullopt;
  Tensor inv(A.dim, t.legs());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = (*x)[i];
  if (prod(A, inv, t) != u) return std::nullopt;
  return inv;
}

void complete_inverses(QuasiHopfAlgebra& A) {
  auto need = [&](Tensor& target, const Tensor& source, const char* label) {
    if (target.legs() != 0) return;
    auto inv = invert(A, source);
    if (!inv) throw std::runtime_error(std::string(label) + " is not invertible");
    target = *inv;
    A.computed.push_back(label);
  };
  need(A.phi_inv, A.phi, "phi_inv");
  need(A.R_inv, A.R, "R_inv");
  if (A.ribbon && !A.ribbon_inv) {
    Tensor t;
    need(t, *A.ribbon, "ribbon_inv");
    A.ribbon_inv = t;
  }
}

bool AxiomReport::all_passed() const { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::vector<int> index_vec(const Index& idx, int legs) { return {idx.begin(), idx.begin() + legs}; }

// Records a failed tensor identity with the first differing coefficient.
void compare(AxiomCheck& c, const Tensor& lhs, const Tensor& rhs, std::vector<int> prefix = {}) {
  if (!c.passed) return;
  auto d = first_difference(lhs, rhs);
  if (!d) return;
  c.passed = false;
  c.witness = std::move(prefix);
  for (int v : index_vec(*d, lhs.legs())) c.witness.push_back(v);
}

// u = sum S(Phi_2 beta S(Phi_3)) S(r_2) alpha r_1 Phi_1 with r = R; r = R^-1
// gives u~.
Tensor drinfeld_u(const QuasiHopfAlgebra& A, const Tensor& r) {
  Tensor u(A.dim, 1);
  A.phi.for_each_nonzero([&](const Index& p, const Scalar& cp) {
    const Tensor e1 = basis_element(A, p[0]), e2 = basis_element(A, p[1]), e3 = basis_element(A, p[2]);
    const Tensor s3 = antipode(A, e3);
    const Tensor left = antipode(A, prod(A, {&e2, &A.beta, &s3}));
    r.for_each_nonzero([&](const Index& q, const Scalar& cq) {
      const Tensor r1 = basis_element(A, q[0]);
      const Tensor sr2 = antipode(A, basis_element(A, q[1]));
      u += prod(A, {&left, &sr2, &A.alpha, &r1, &e1}) * (cp * cq);
    });
  });
  return u;
}

}  // namespace

AxiomReport validate(const QuasiHopfAlgebra& A) {
  AxiomReport rep;
  rep.checks.reserve(64);  // references returned by add() stay valid
  const int n = A.dim;
  auto add = [&](const std::string& name) -> AxiomCheck& {
    rep.checks.push_back({name, true, {}, ""});
    return rep.checks.back();
  };
  std::vector<Tensor> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_element(A, i));

  {
    AxiomCheck& c = add("unit");
    for (int j = 0; j < n && c.passed; ++j) {
      if (prod(A, e[0], e[j]) != e[j] || prod(A, e[j], e[0]) != e[j]) {
        c.passed = false;
        c.witness = {j};
      }
    }
  }
  {
    AxiomCheck& c = add("associativity");
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j) {
        const Tensor ij = prod(A, e[i], e[j]);
        for (int k = 0; k < n && c.passed; ++k)
          if (prod(A, ij, e[k]) != prod(A, e[i], prod(A, e[j], e[k]))) {
            c.passed = false;
            c.witness = {i, j, k};
          }
      }
  }
  {
    AxiomCheck& c = add("counit_algebra_map");
    if (!A.counit[0].is_one()) {
      c.passed = false;
      c.witness = {0};
      c.detail = "epsilon(1) != 1";
    }
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j)
        if (counit(A, prod(A, e[i], e[j])) != A.counit[i] * A.counit[j]) {
          c.passed = false;
          c.witness = {i, j};
        }
  }
  {
    AxiomCheck& c = add("coproduct_algebra_map");
    if (A.coproduct[0] != one(A, 2)) {
      c.passed = false;
      c.witness = {0};
      c.detail = "Delta(1) != 1(x)1";
    }
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j)
        if (coproduct(A, prod(A, e[i], e[j])) != prod(A, A.coproduct[i], A.coproduct[j])) {
          c.passed = false;
          c.witness = {i, j};
        }
  }
  {
    AxiomCheck& c = add("counitality");
    for (int i = 0; i < n && c.passed; ++i) {
      if (counit_leg(A.coproduct[i], 1, A.counit) != e[i]) {
        c.passed = false;
        c.witness = {i};
        c.detail = "(epsilon (x) id) Delta";
      } else if (counit_leg(A.coproduct[i], 2, A.counit) != e[i]) {
        c.passed = false;
        c.witness = {i};
        c.detail = "(id (x) epsilon) Delta";
      }
    }
  }
  {
    AxiomCheck& c = add("quasi_coassociativity");
    for (int i = 0; i < n && c.passed; ++i) {
      const Tensor left = coproduct_leg(A.coproduct[i], 1, A.coproduct);
      const Tensor right = coproduct_leg(A.coproduct[i], 2, A.coproduct);
      compare(c, prod(A, left, A.phi), prod(A, A.phi, right), {i});
    }
  }
  {
    AxiomCheck& c = add("phi_invertible");
    compare(c, prod(A, A.phi, A.phi_inv), one(A, 3));
    compare(c, prod(A, A.phi_inv, A.phi), one(A, 3));
  }
  {
    AxiomCheck& c = add("phi_counital");
    compare(c, counit_leg(A.phi, 2, A.counit), one(A, 2));
  }
  {
    AxiomCheck& c = add("three_cocycle");
    // (Delta(x)id(x)id)(Phi) (id(x)id(x)Delta)(Phi)
    //   = (Phi(x)1) (id(x)Delta(x)id)(Phi) (1(x)Phi)
    const Tensor lhs = prod(A, coproduct_leg(A.phi, 1, A.coproduct), coproduct_leg(A.phi, 3, A.coproduct));
    const Tensor p1 = embed(A.phi, 4, {1, 2, 3});
    const Tensor p2 = coproduct_leg(A.phi, 2, A.coproduct);
    const Tensor p3 = embed(A.phi, 4, {2, 3, 4});
    compare(c, lhs, prod(A, {&p1, &p2, &p3}));
  }
  {
    AxiomCheck& c = add("antipode_anti_multiplicative");
    if (antipode(A, e[0]) != e[0]) {
      c.passed = false;
      c.witness = {0};
      c.detail = "S(1) != 1";
    }
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j)
        if (antipode(A, prod(A, e[i], e[j])) != prod(A, antipode(A, e[j]), antipode(A, e[i]))) {
          c.passed = false;
          c.witness = {i, j};
        }
  }
  {
    AxiomCheck& cal = add("antipode_alpha");
    AxiomCheck& cb_ = add("antipode_beta");
    for (int i = 0; i < n; ++i) {
      Tensor sa(n, 1), sb(n, 1);
      A.coproduct[i].for_each_nonzero([&](const Index& d, const Scalar& v) {
        const Tensor s1 = antipode(A, e[d[0]]), s2 = antipode(A, e[d[1]]);
        sa += prod(A, {&s1, &A.alpha, &e[d[1]]}) * v;
        sb += prod(A, {&e[d[0]], &A.beta, &s2}) * v;
      });
      compare(cal, sa, A.alpha * A.counit[i], {i});
      compare(cb_, sb, A.beta * A.counit[i], {i});
    }
  }
  {
    AxiomCheck& cphi = add("phi_antipode");
    AxiomCheck& c2 = add("phi_inv_antipode");
    Tensor x(n, 1), y(n, 1);
    A.phi.for_each_nonzero([&](const Index& p, const Scalar& v) {
      const Tensor s1 = antipode(A, e[p[0]]), s3 = antipode(A, e[p[2]]);
      x += prod(A, {&s1, &A.alpha, &e[p[1]], &A.beta, &s3}) * v;
    });
    A.phi_inv.for_each_nonzero([&](const Index& p, const Scalar& v) {
      const Tensor s2 = antipode(A, e[p[1]]);
      y += prod(A, {&e[p[0]], &A.beta, &s2, &A.alpha, &e[p[2]]}) * v;
    });
    compare(cphi, x, one(A));
    compare(c2, y, one(A));
  }
  {
    AxiomCheck& c = add("R_invertible");
    compare(c, prod(A, A.R, A.R_inv), one(A, 2));
    compare(c, prod(A, A.R_inv, A.R), one(A, 2));
  }
  {
    AxiomCheck& c = add("R_intertwines_coproduct");
    for (int i = 0; i < n && c.passed; ++i)
      compare(c, prod(A, A.R, A.coproduct[i]), prod(A, coproduct_op(A, e[i]), A.R), {i});
  }
  {
    AxiomCheck& c = add("hexagon_left");
    // (Delta(x)id)(R) = Psi_231 R_13 Phi_132 R_23 Psi
    const Tensor a = subscript(A.phi_inv, {2, 3, 1});
    const Tensor b = embed(A.R, 3, {1, 3});
    const Tensor cc = subscript(A.phi, {1, 3, 2});
    const Tensor d = embed(A.R, 3, {2, 3});
    compare(c, coproduct_leg(A.R, 1, A.coproduct), prod(A, {&a, &b, &cc, &d, &A.phi_inv}));
  }
  {
    AxiomCheck& c = add("hexagon_right");
    // (id(x)Delta)(R) = Phi_312 R_13 Psi_213 R_12 Phi
    const Tensor a = subscript(A.phi, {3, 1, 2});
    const Tensor b = embed(A.R, 3, {1, 3});
    const Tensor cc = subscript(A.phi_inv, {2, 1, 3});
    const Tensor d = embed(A.R, 3, {1, 2});
    compare(c, coproduct_leg(A.R, 2, A.coproduct), prod(A, {&a, &b, &cc, &d, &A.phi}));
  }
  {
    AxiomCheck& c = add("R_counital");
    Tensor l(n, 1), r(n, 1);
    A.R.for_each_nonzero([&](const Index& p, const Scalar& v) {
      l += e[p[1]] * (v * A.counit[p[0]]);
      r += e[p[0]] * (v * A.counit[p[1]]);
    });
    compare(c, l, one(A));
    compare(c, r, one(A));
  }
  {
    AxiomCheck& c = add("antipode_invertible");
    if (!inverse(A.antipode)) c.passed = false;
  }
  if (A.ribbon) {
    const Tensor& v = *A.ribbon;
    {
      AxiomCheck& c = add("ribbon_invertible");
      compare(c, prod(A, v, *A.ribbon_inv), one(A));
    }
    {
      AxiomCheck& c = add("ribbon_central");
      for (int i = 0; i < n && c.passed; ++i) compare(c, prod(A, v, e[i]), prod(A, e[i], v), {i});
    }
    {
      AxiomCheck& c = add("ribbon_coproduct");
      compare(c, prod(A, monodromy(A), coproduct(A, v)), outer(v, v));
    }
    {
      AxiomCheck& c = add("ribbon_antipode");
      compare(c, antipode(A, v), v);
    }
    {
      AxiomCheck& c = add("ribbon_square");
      const Tensor u = drinfeld_u(A, A.R);
      compare(c, prod(A, v, v), prod(A, u, antipode(A, u)));
    }
    {
      AxiomCheck& c = add("ribbon_counit");
      if (!counit(A, v).is_one()) c.passed = false;
    }
  }
  return rep;
}

Tensor monodromy(const QuasiHopfAlgebra& A) { return prod(A, subscript(A.R, {2, 1}), A.R); }

DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  // X = (1(x)Phi) (id(x)id(x)Delta)(Phi^-1)
  const Tensor X = prod(A, embed(A.phi, 4, {2, 3, 4}), coproduct_leg(A.phi_inv, 3, A.coproduct));
  Tensor gamma(n, 2);
  X.for_each_nonzero([&](const Index& x, const Scalar& v) {
    const Tensor s2 = antipode(A, basis_element(A, x[1])), s1 = antipode(A, basis_element(A, x[0]));
    const Tensor e3 = basis_element(A, x[2]), e4 = basis_element(A, x[3]);
    gamma += outer(prod(A, {&s2, &A.alpha, &e3}), prod(A, {&s1, &A.alpha, &e4})) * v;
  });
  Tensor f(n, 2);
  A.phi.for_each_nonzero([&](const Index& p, const Scalar& v) {
    const Tensor left = antipode(A, coproduct_op(A, basis_element(A, p[0])));
    const Tensor e2 = basis_element(A, p[1]);
    const Tensor s3 = antipode(A, basis_element(A, p[2]));
    const Tensor right = coproduct(A, prod(A, {&e2, &A.beta, &s3}));
    f += prod(A, {&left, &gamma, &right}) * v;
  });
  auto finv = invert(A, f);
  if (!finv) throw std::runtime_error("Drinfeld twist is not invertible");
  for (int i = 0; i < n; ++i) {
    const Tensor ei = basis_element(A, i);
    const Tensor mid = coproduct(A, antipode(A, ei));
    if (prod(A, {&f, &mid, &*finv}) != antipode(A, coproduct_op(A, ei)))
      throw std::runtime_error("Drinfeld twist fails the conjugation identity at basis element " + std::to_string(i));
  }
  return {f, *finv, gamma};
}

DrinfeldElement drinfeld_element(const QuasiHopfAlgebra& A) {
  DrinfeldElement d;
  d.u = drinfeld_u(A, A.R);
  // The inverse braiding c^-1_{U*,U} acts by R^-1 after the flip, so its
  // legs enter with the roles of R_1 and R_2 exchanged.
  d.u_tilde = drinfeld_u(A, subscript(A.R_inv, {2, 1}));
  if (A.ribbon) {
    d.u_inv = antipode_inverse(A, d.u_tilde);
    d.u_inv_from_ribbon = true;
  } else {
    auto inv = invert(A, d.u);
    if (!inv) throw std::runtime_error("Drinfeld element is not invertible");
    d.u_inv = *inv;
  }
  if (prod(A, d.u, d.u_inv) != one(A) || prod(A, d.u_inv, d.u) != one(A))
    throw std::runtime_error("u u^-1 != 1 for the computed Drinfeld element");
  for (int i = 0; i < A.dim; ++i) {
    const Tensor ei = basis_element(A, i);
    if (antipode(A, antipode(A, ei)) != prod(A, {&d.u, &ei, &d.u_inv}))
      throw std::runtime_error("S^2 != u(-)u^-1 at basis element " + std::to_string(i));
  }
  return d;
}

}  // namespace qhopf
