#include "qhopf/fusion.hpp"

#include <stdexcept>

#include "qhopf/parallel.hpp"
#include "qhopf/repcat.hpp"

namespace qhopf {

namespace {

std::vector<std::pair<Index, Scalar>> terms(const Tensor& t) {
  std::vector<std::pair<Index, Scalar>> out;
  t.for_each_nonzero([&](const Index& i, const Scalar& c) { out.emplace_back(i, c); });
  return out;
}

Scalar trace(const ExactMatrix& m) {
  Scalar s;
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Tensor u_inv_v(const QuasiHopfAlgebra& A) {
  if (!A.ribbon) throw std::runtime_error("ribbon data required");
  return prod(A, drinfeld_element(A).u_inv, *A.ribbon);
}

long to_count(const Scalar& s) {
  if (!s.is_rational() || s.rational().get_den() != 1 || s.rational() < 0 || !s.rational().get_num().fits_slong_p())
    throw std::runtime_error("coefficient " + s.str() + " is not a non-negative integer");
  return s.rational().get_num().get_si();
}

}  // namespace

Vector character(const QuasiHopfAlgebra& A, const AModule& M) {
  Vector ch(A.dim);
  for (int i = 0; i < A.dim; ++i) ch[i] = trace(M.action[i]);
  return ch;
}

int radical_dimension(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  std::vector<ExactMatrix> L;
  for (int i = 0; i < n; ++i) L.push_back(left_multiplication(A, basis_element(A, i)));
  ExactMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = trace(L[i] * L[j]);
  return n - rank(g);
}

SimpleSet make_simple_set(const QuasiHopfAlgebra& A, std::vector<AModule> simples) {
  SimpleSet S;
  S.simples = std::move(simples);
  int sum_sq = 0;
  for (const AModule& M : S.simples) {
    S.characters.push_back(character(A, M));
    sum_sq += M.dim * M.dim;
  }
  S.characters_independent =
      S.characters.empty() || rank(from_columns(S.characters, A.dim)) == static_cast<int>(S.characters.size());
  S.radical_dim = radical_dimension(A);
  S.complete = sum_sq == A.dim - S.radical_dim;
  return S;
}

bool is_central(const QuasiHopfAlgebra& A, const Vector& x) {
  const Tensor t = Tensor::from_vector(x);
  for (int i = 0; i < A.dim; ++i) {
    const Tensor e = basis_element(A, i);
    if (prod(A, e, t) != prod(A, t, e)) return false;
  }
  return true;
}

Vector chi_central(const QuasiHopfAlgebra& A, const AModule& V) {
  const int n = A.dim;
  const Tensor uv = u_inv_v(A);
  const Tensor m = embed(monodromy(A), 3, {1, 2});
  const Tensor g = prod(A, {&A.phi_inv, &m, &A.phi});  // Psi1 M1 Phi1, Psi2 M2 Phi2, Psi3 Phi3
  Tensor out(n, 1);
  for (const auto& [i, c] : terms(g)) {
    const Tensor e2 = basis_element(A, i[1]);
    const Tensor s = antipode(A, prod(A, e2, A.beta));
    const Tensor e3 = basis_element(A, i[2]);
    const Tensor inner = prod(A, {&uv, &s, &A.alpha, &e3});
    const Scalar tr = trace(act(A, inner, V));
    if (!tr.is_zero()) out += basis_element(A, i[0]) * (tr * c);
  }
  if (!is_central(A, out.coeffs())) throw std::runtime_error("chi_" + V.label + " is not central");
  return out.coeffs();
}

Vector phi_central(const QuasiHopfAlgebra& A, const AModule& V, const Vector& cvec) {
  const int n = A.dim;
  const Tensor c = Tensor::from_vector(cvec);
  // F~ = sum Psi1 beta S(Phi1 Psi2) c Phi2 Psi3' (x) Phi3 Psi3''.
  const auto psi4 = terms(coproduct_leg(A.phi_inv, 3, A.coproduct));
  Tensor ft(n, 2);
  for (const auto& [pi, pc] : terms(A.phi)) {
    const Tensor f1 = basis_element(A, pi[0]), f2 = basis_element(A, pi[1]), f3 = basis_element(A, pi[2]);
    for (const auto& [qi, qc] : psi4) {
      const Tensor q1 = basis_element(A, qi[0]), q2 = basis_element(A, qi[1]);
      const Tensor q3a = basis_element(A, qi[2]), q3b = basis_element(A, qi[3]);
      const Tensor s = antipode(A, prod(A, f1, q2));
      const Tensor left = prod(A, {&q1, &A.beta, &s, &c, &f2, &q3a});
      ft += outer(left, prod(A, f3, q3b)) * (pc * qc);
    }
  }
  // F = (id (x) mu)(id (x) S (x) id)[(1 (x) 1 (x) alpha) Psi (Delta (x) id)(F~) Phi (1 (x) beta (x) 1)].
  const Tensor a3 = embed(A.alpha, 3, {3});
  const Tensor dft = coproduct_leg(ft, 1, A.coproduct);
  const Tensor b2 = embed(A.beta, 3, {2});
  const Tensor g = prod(A, {&a3, &A.phi_inv, &dft, &A.phi, &b2});
  const Tensor uv = u_inv_v(A);
  Tensor out(n, 1);
  for (const auto& [i, cf] : terms(g)) {
    const Tensor f2 = prod(A, antipode(A, basis_element(A, i[1])), basis_element(A, i[2]));
    const Scalar tr = trace(act(A, prod(A, uv, f2), V));
    if (!tr.is_zero()) out += basis_element(A, i[0]) * (tr * cf);
  }
  if (!is_central(A, out.coeffs())) throw std::runtime_error("phi_" + V.label + " is not central");
  return out.coeffs();
}

std::vector<long> grothendieck_class(const QuasiHopfAlgebra& A, const AModule& M, const SimpleSet& S) {
  if (!S.characters_independent) throw std::runtime_error("simple characters are linearly dependent");
  const auto sol = solve(from_columns(S.characters, A.dim), character(A, M));
  if (!sol) throw std::runtime_error("character of " + M.label + " is not a combination of simple characters");
  std::vector<long> out;
  for (const Scalar& s : *sol) out.push_back(to_count(s));
  return out;
}

FusionTable verlinde_fusion(const QuasiHopfAlgebra& A, const SimpleSet& S, bool run_oracle) {
  const int r = static_cast<int>(S.simples.size());
  FusionTable t;
  for (const AModule& M : S.simples) t.labels.push_back(M.label);
  std::vector<Vector> chi(r);
  parallel_for(r, [&](std::size_t i) { chi[i] = chi_central(A, S.simples[i]); });
  if (r > 0 && rank(from_columns(chi, A.dim)) != r) throw std::runtime_error("chi values are linearly dependent");
  const ExactMatrix basis = from_columns(chi, A.dim);
  t.N.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < r; ++v) {
      const Tensor p = prod(A, Tensor::from_vector(chi[u]), Tensor::from_vector(chi[v]));
      const auto sol = solve(basis, p.coeffs());
      if (!sol) throw std::runtime_error("chi product is outside the span of the chi values");
      for (int w = 0; w < r; ++w) t.N[u][v][w] = to_count((*sol)[w]);
    }
  if (run_oracle) {
    t.oracle_run = true;
    t.oracle.assign(r, std::vector<std::vector<long>>(r));
    for (int u = 0; u < r; ++u)
      for (int v = 0; v < r; ++v)
        t.oracle[u][v] = grothendieck_class(A, tensor_module(A, S.simples[u], S.simples[v]), S);
    t.matches_oracle = t.oracle == t.N;
  }
  // The unit object is the simple whose character is the counit.
  t.unit_column = false;
  for (int u = 0; u < r; ++u) {
    if (S.characters[u] != A.counit) continue;
    bool ok = true;
    for (int v = 0; v < r; ++v)
      for (int w = 0; w < r; ++w) ok = ok && t.N[u][v][w] == (v == w ? 1 : 0);
    t.unit_column = ok;
  }
  t.symmetric = true;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < r; ++v) t.symmetric = t.symmetric && t.N[u][v] == t.N[v][u];
  return t;
}

}  // namespace qhopf
