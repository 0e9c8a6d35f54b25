#include "qhopf/modular.hpp"

#include <stdexcept>

#include "qhopf/parallel.hpp"

namespace qhopf {

namespace {

std::vector<std::pair<Index, Scalar>> terms(const Tensor& t) {
  std::vector<std::pair<Index, Scalar>> out;
  t.for_each_nonzero([&](const Index& i, const Scalar& c) { out.emplace_back(i, c); });
  return out;
}

ExactMatrix right_multiplication(const QuasiHopfAlgebra& A, const Tensor& t) {
  const int n = A.dim;
  ExactMatrix m(n, n);
  for (int x = 0; x < n; ++x) m.set_col(x, prod(A, basis_element(A, x), t).coeffs());
  return m;
}

Vector as_vector(const Tensor& t) { return t.coeffs(); }
Tensor as_element(const Vector& v) { return Tensor::from_vector(v); }

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  return s;
}

// Row vector l(x (x) y) = lambda(Delta_hat(e_x (x) e_y)).
Vector lambda_delta(const CoendMaps& maps, const Vector& lambda) {
  const int nn = maps.delta_hat.cols();
  Vector l(nn);
  for (int c = 0; c < nn; ++c) {
    Scalar s;
    for (int r = 0; r < maps.delta_hat.rows(); ++r)
      if (!maps.delta_hat(r, c).is_zero()) s.add_product(lambda[r], maps.delta_hat(r, c));
    l[c] = s;
  }
  return l;
}

Scalar pair_value(const Vector& l, const Tensor& a, const Tensor& b) {
  const int n = a.dim();
  Scalar s;
  for (int x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < n; ++y)
      if (!b[y].is_zero() && !l[x * n + y].is_zero()) s += a[x] * b[y] * l[x * n + y];
  }
  return s;
}

ExactMatrix stacked_kernel_matrix(const std::vector<ExactMatrix>& blocks) {
  const int cols = blocks.front().cols();
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  ExactMatrix m(rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < cols; ++c) m(off + r, c) = b(r, c);
    off += b.rows();
  }
  return m;
}

ExactMatrix power(const ExactMatrix& m, int e) {
  ExactMatrix r = ExactMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

std::vector<Vector> center(const QuasiHopfAlgebra& A) {
  std::vector<ExactMatrix> blocks;
  for (int i = 0; i < A.dim; ++i) {
    const Tensor e = basis_element(A, i);
    blocks.push_back(left_multiplication(A, e) - right_multiplication(A, e));
  }
  return kernel(stacked_kernel_matrix(blocks));
}

IntegralResult integral_L(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  const int n = A.dim;
  ExactMatrix sys(2 * n * n, n);
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k) {
      const int r1 = x * n + k, r2 = n * n + x * n + k;
      for (int j = 0; j < n; ++j) {
        sys(r1, j) += maps.mu_hat(k * n + j, x);
        sys(r2, j) += maps.mu_hat(j * n + k, x);
      }
      sys(r1, x) -= A.alpha[k];
      sys(r2, x) -= A.alpha[k];
    }
  IntegralResult res;
  res.solutions = kernel(sys);
  if (res.solutions.size() == 1) {
    res.lambda_hat = res.solutions.front();
    const Vector& l = *res.lambda_hat;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& w = maps.omega_hat.at({i, j});
        if (!w.is_zero()) res.k += l[i] * l[j] * w;
      }
  }
  return res;
}

CointegralResult cointegral_L(const QuasiHopfAlgebra& A, const std::optional<Vector>& lambda_hat) {
  const int n = A.dim;
  std::vector<ExactMatrix> lb, rb;
  for (int i = 0; i < n; ++i) {
    const Tensor e = basis_element(A, i);
    const ExactMatrix eps = ExactMatrix::identity(n) * A.counit[i];
    lb.push_back(left_multiplication(A, e) - eps);
    rb.push_back(right_multiplication(A, e) - eps);
  }
  CointegralResult res;
  res.left = kernel(stacked_kernel_matrix(lb));
  res.right = kernel(stacked_kernel_matrix(rb));
  std::vector<ExactMatrix> both = lb;
  both.insert(both.end(), rb.begin(), rb.end());
  res.two_sided = kernel(stacked_kernel_matrix(both));
  if (!res.two_sided.empty()) {
    Vector c = res.two_sided.front();
    if (lambda_hat) {
      res.lambda_of_c = dot(*lambda_hat, c);
      if (!res.lambda_of_c.is_zero()) {
        const Scalar inv = res.lambda_of_c.inverse();
        for (auto& x : c) x *= inv;
        res.normalised = true;
      }
    }
    res.c = c;
  }
  return res;
}

bool satisfies_cointegral_conditions(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& c) {
  const int n = A.dim;
  for (int y = 0; y < n; ++y) {
    Vector left(n), right(n);
    for (int x = 0; x < n; ++x) {
      if (c[x].is_zero()) continue;
      for (int r = 0; r < n; ++r) {
        left[r] += c[x] * maps.delta_hat(r, x * n + y);
        right[r] += c[x] * maps.delta_hat(r, y * n + x);
      }
    }
    for (int r = 0; r < n; ++r) {
      const Scalar expect = c[r] * maps.eta_hat[y];
      if (left[r] != expect || right[r] != expect) return false;
    }
  }
  return true;
}

ExactMatrix k_of(const QuasiHopfAlgebra& A, const Tensor& v) {
  const int n = A.dim;
  const Tensor dv = coproduct(A, v);
  ExactMatrix m(n, n);
  for (int x = 0; x < n; ++x) {
    Tensor acc(n, 1);
    const Tensor ex = basis_element(A, x);
    for (const auto& [i, c] : terms(dv)) {
      const Tensor s = antipode(A, basis_element(A, i[0]));
      const Tensor e2 = basis_element(A, i[1]);
      acc += prod(A, {&s, &ex, &e2}) * c;
    }
    m.set_col(x, acc.coeffs());
  }
  return m;
}

STHat s_t_hat(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& lambda_hat) {
  const int n = A.dim;
  STHat st;
  if (!A.ribbon) throw std::runtime_error("ribbon data required");

  // Route through Q_hat.
  const ExactMatrix Q = q_hat(A);
  st.S_hat = ExactMatrix(n, n);
  for (int x = 0; x < n; ++x) {
    Vector in(static_cast<std::size_t>(n) * n);
    for (int m = 0; m < n; ++m) in[x * n + m] = A.alpha[m];
    const Vector out = Q * in;
    for (int j = 0; j < n; ++j) {
      Scalar s;
      for (int i = 0; i < n; ++i)
        if (!lambda_hat[i].is_zero()) s.add_product(lambda_hat[i], out[i * n + j]);
      st.S_hat(j, x) = s;
    }
  }

  // Route through Delta_hat, omega_hat and Phi with each leg split.
  const Vector l = lambda_delta(maps, lambda_hat);
  const auto phi_t = terms(A.phi);
  const auto om_t = terms(maps.omega_hat);
  std::vector<Tensor> e, s;
  std::vector<std::vector<std::pair<Index, Scalar>>> cop;
  for (int i = 0; i < n; ++i) {
    e.push_back(basis_element(A, i));
    s.push_back(Tensor::from_vector(A.antipode.col(i)));
    cop.push_back(terms(coproduct(A, e.back())));
  }
  st.S_hat_pair = ExactMatrix(n, n);
  parallel_for(n, [&](std::size_t xs) {
    const int x = static_cast<int>(xs);
    Tensor acc(n, 1);
    for (const auto& [pi, pc] : phi_t)
      for (const auto& [d1, c1] : cop[pi[0]])
        for (const auto& [d2, c2] : cop[pi[1]])
          for (const auto& [d3, c3] : cop[pi[2]]) {
            const Tensor a = prod(A, {&s[d3[0]], &e[x], &e[d3[1]]});
            const Scalar coef = pc * c1 * c2 * c3;
            for (const auto& [wi, wc] : om_t) {
              const Tensor b = prod(A, {&s[d2[0]], &e[wi[0]], &e[d2[1]]});
              const Scalar v = pair_value(l, a, b);
              if (v.is_zero()) continue;
              acc += prod(A, {&s[d1[0]], &e[wi[1]], &e[d1[1]]}) * (coef * wc * v);
            }
          }
    st.S_hat_pair.set_col(x, acc.coeffs());
  });
  st.routes_agree = st.S_hat == st.S_hat_pair;

  // Restriction to coadjoint invariants f: f(S_hat(a)) = sum l(a (x) w1) f(w2).
  st.invariants_form_agrees = true;
  for (const Vector& f : coend_invariants(A)) {
    for (int x = 0; x < n && st.invariants_form_agrees; ++x) {
      Scalar rhs;
      for (const auto& [wi, wc] : om_t) rhs += l[x * n + wi[0]] * f[wi[1]] * wc;
      if (dot(f, st.S_hat.col(x)) != rhs) st.invariants_form_agrees = false;
    }
  }

  // Restriction to alpha Z(A): S_hat(alpha z) = sum l(alpha z (x) w1) w2.
  st.alpha_center_form_agrees = true;
  for (const Vector& z : center(A)) {
    const Tensor az = prod(A, A.alpha, as_element(z));
    Tensor rhs(n, 1);
    for (const auto& [wi, wc] : om_t) rhs += e[wi[1]] * (pair_value(l, az, e[wi[0]]) * wc);
    if (st.S_hat * as_vector(az) != rhs.coeffs()) st.alpha_center_form_agrees = false;
  }

  st.T_hat = left_multiplication(A, *A.ribbon_inv);
  return st;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& x) {
  if (basis.empty()) {
    for (const auto& v : x)
      if (!v.is_zero()) return std::nullopt;
    return Vector{};
  }
  return solve(from_columns(basis, static_cast<int>(x.size())), x);
}

std::optional<Scalar> proportionality(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<Scalar> t;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (b(r, c).is_zero()) {
        if (!a(r, c).is_zero()) return std::nullopt;
        continue;
      }
      if (!t) t = a(r, c) / b(r, c);
    }
  if (!t) return std::nullopt;
  if (a != b * *t) return std::nullopt;
  return t;
}

SL2ZOnCenter sl2z_on_center(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& lambda_hat,
                            const std::vector<Vector>& center_basis) {
  const int n = A.dim;
  if (!A.ribbon) throw std::runtime_error("ribbon data required");
  const Vector l = lambda_delta(maps, lambda_hat);
  SL2ZOnCenter out;
  // Left factor sum Psi1 beta S(Psi2) w1 Psi3, paired with w2.
  std::vector<std::pair<Tensor, Tensor>> pieces;  // (left element, w2 element)
  for (const auto& [pi, pc] : terms(A.phi_inv)) {
    const Tensor e1 = basis_element(A, pi[0]);
    const Tensor s2 = antipode(A, basis_element(A, pi[1]));
    const Tensor e3 = basis_element(A, pi[2]);
    for (const auto& [wi, wc] : terms(maps.omega_hat)) {
      const Tensor w1 = basis_element(A, wi[0]);
      pieces.emplace_back(prod(A, {&e1, &A.beta, &s2, &w1, &e3}) * (pc * wc), basis_element(A, wi[1]));
    }
  }
  out.S_Z_on_A = ExactMatrix(n, n);
  for (int x = 0; x < n; ++x) {
    const Tensor az = prod(A, A.alpha, basis_element(A, x));
    Tensor acc(n, 1);
    for (const auto& [left, w2] : pieces) {
      const Scalar v = pair_value(l, w2, az);
      if (!v.is_zero()) acc += left * v;
    }
    out.S_Z_on_A.set_col(x, acc.coeffs());
  }
  const ExactMatrix T_on_A = left_multiplication(A, *A.ribbon_inv);
  const int d = static_cast<int>(center_basis.size());
  out.S_Z = ExactMatrix(d, d);
  out.T_Z = ExactMatrix(d, d);
  out.preserves_center = true;
  for (int j = 0; j < d; ++j) {
    const auto cs = coordinates(center_basis, out.S_Z_on_A * center_basis[j]);
    const auto ct = coordinates(center_basis, T_on_A * center_basis[j]);
    if (!cs || !ct) {
      out.preserves_center = false;
      continue;
    }
    for (int i = 0; i < d; ++i) {
      out.S_Z(i, j) = (*cs)[i];
      out.T_Z(i, j) = (*ct)[i];
    }
  }
  if (out.preserves_center && d > 0) {
    const ExactMatrix st = out.S_Z * out.T_Z;
    out.lambda = proportionality(st * st * st, out.S_Z * out.S_Z);
  }
  return out;
}

bool ModularData::all_relations_hold() const {
  for (const auto& r : relations)
    if (!r.passed) return false;
  return true;
}

ModularData modular_data(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  ModularData md;
  auto rel = [&](const std::string& name, bool ok, const std::string& detail = "") {
    md.relations.push_back({name, ok, ok ? "" : detail});
  };
  md.center_basis = center(A);
  md.integral = integral_L(A, maps);
  rel("integral_space_one_dimensional", md.integral.dimension() == 1,
      "two-sided solution space has dimension " + std::to_string(md.integral.dimension()));
  md.cointegral = cointegral_L(A, md.integral.lambda_hat);
  rel("two_sided_integral_exists", md.cointegral.c.has_value(), "no two-sided integral of A");
  if (md.cointegral.c) {
    rel("integral_is_coend_cointegral", satisfies_cointegral_conditions(A, maps, *md.cointegral.c),
        "cointegral conditions fail");
  }
  if (!md.integral.lambda_hat) return md;
  rel("lambda_of_c_nonzero", md.cointegral.normalised, "lambda_hat(c) = 0");
  rel("pairing_value_nonzero", !md.integral.k.is_zero(), "k = 0");
  if (!A.ribbon) return md;

  const Vector& lam = *md.integral.lambda_hat;
  const Scalar& k = md.integral.k;
  md.st = s_t_hat(A, maps, lam);
  const STHat& st = *md.st;
  const int n = A.dim;
  rel("S_hat_routes_agree", st.routes_agree, "Q_hat route and pairing route differ");
  rel("S_hat_invariants_form", st.invariants_form_agrees, "restriction to invariants differs");
  rel("S_hat_alpha_center_form", st.alpha_center_form_agrees, "restriction to alpha Z(A) differs");
  {
    const auto sl_inv = inverse(maps.s_hat_L);
    rel("S_hat_squared_is_k_S_L_inverse", sl_inv && st.S_hat * st.S_hat == *sl_inv * k,
        "S_hat^2 != k S_L_hat^-1");
  }
  rel("S_hat_fourth_is_k2_K_v", power(st.S_hat, 4) == k_of(A, *A.ribbon) * (k * k), "S_hat^4 != k^2 K(v)");
  {
    const ExactMatrix stt = st.S_hat * st.T_hat;
    md.lambda_hat = proportionality(stt * stt * stt, st.S_hat * st.S_hat);
    rel("ST_cubed_proportional_to_S_squared", md.lambda_hat && !md.lambda_hat->is_zero(),
        "(S_hat T_hat)^3 is not a nonzero multiple of S_hat^2");
  }
  {
    bool commutes = true;
    const AModule L = coadjoint_module(A);
    for (int b = 0; b < n && commutes; ++b) {
      const ExactMatrix K = L.action[b].transpose();
      if (st.S_hat * K != K * st.S_hat) commutes = false;
    }
    rel("S_hat_commutes_with_coadjoint_action", commutes, "S_hat is not an intertwiner");
  }
  md.lambda_note =
      "the integral is fixed only up to scale; rescaling it by t multiplies lambda by t and k by t^2, "
      "so lambda^2/k is the scale-free invariant";

  md.sl2z = sl2z_on_center(A, maps, lam, md.center_basis);
  const SL2ZOnCenter& z = *md.sl2z;
  rel("S_Z_T_Z_preserve_center", z.preserves_center, "image leaves the centre");
  if (z.preserves_center) {
    const int d = static_cast<int>(md.center_basis.size());
    rel("S_Z_fourth_is_k2", power(z.S_Z, 4) == ExactMatrix::identity(d) * (k * k), "S_Z^4 != k^2 id");
    rel("S_Z_T_Z_cubed_proportional", z.lambda && !z.lambda->is_zero(), "(S_Z T_Z)^3 not proportional to S_Z^2");
    rel("lambda_Z_equals_lambda_hat", z.lambda && md.lambda_hat && *z.lambda == *md.lambda_hat,
        "lambda on the centre differs from lambda on A");
  }
  return md;
}

}  // namespace qhopf
