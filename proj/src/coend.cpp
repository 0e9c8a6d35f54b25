#include "qhopf/coend.hpp"

#include <map>
#include <stdexcept>

#include "qhopf/parallel.hpp"

namespace qhopf {

namespace {

struct Term {
  Index idx;
  Scalar c;
};

std::vector<Term> terms(const Tensor& t) {
  std::vector<Term> out;
  t.for_each_nonzero([&](const Index& i, const Scalar& c) { out.push_back({i, c}); });
  return out;
}

// Basis elements and their antipode images, indexed by basis label.
struct Basis {
  std::vector<Tensor> e, s;
  Basis(const QuasiHopfAlgebra& A) {
    for (int i = 0; i < A.dim; ++i) {
      e.push_back(basis_element(A, i));
      s.push_back(Tensor::from_vector(A.antipode.col(i)));
    }
  }
};

// sum S(Y3) Y4 (x) S(Y1) Y2 for a four-leg Y.
Tensor pairing_contract(const QuasiHopfAlgebra& A, const Basis& b, const Tensor& Y) {
  Tensor out(A.dim, 2);
  for (const Term& t : terms(Y)) {
    const Tensor l = prod(A, b.s[t.idx[2]], b.e[t.idx[3]]);
    const Tensor r = prod(A, b.s[t.idx[0]], b.e[t.idx[1]]);
    out += outer(l, r) * t.c;
  }
  return out;
}

Tensor tensor_of(const QuasiHopfAlgebra& A, const Tensor& a, const Tensor& b, const Tensor& c, const Tensor& d) {
  (void)A;
  return outer(outer(a, b), outer(c, d));
}

Tensor w_element(const QuasiHopfAlgebra& A) {
  const Tensor one1 = one(A);
  const Tensor alphas = tensor_of(A, one1, A.alpha, one1, A.alpha);
  const Tensor psi = embed(A.phi_inv, 4, {2, 3, 4});
  const Tensor m = embed(monodromy(A), 4, {2, 3});
  const Tensor phi = embed(A.phi, 4, {2, 3, 4});
  const Tensor dpsi = coproduct_leg(A.phi_inv, 3, A.coproduct);
  return prod(A, {&alphas, &psi, &m, &phi, &dpsi});
}

Tensor x_q_element(const QuasiHopfAlgebra& A) {
  const Tensor dphi = coproduct_leg(A.phi, 3, A.coproduct);
  const Tensor psi = embed(A.phi_inv, 4, {2, 3, 4});
  const Tensor m = embed(monodromy(A), 4, {2, 3});
  const Tensor phi = embed(A.phi, 4, {2, 3, 4});
  const Tensor dpsi = coproduct_leg(A.phi_inv, 3, A.coproduct);
  return prod(A, {&dphi, &psi, &m, &phi, &dpsi});
}

// p = sum Phi1 (x) Phi2 beta S(Phi3).
Tensor x_d_element(const QuasiHopfAlgebra& A, const Basis& b) {
  Tensor out(A.dim, 2);
  for (const Term& t : terms(A.phi)) {
    const Tensor r = prod(A, {&b.e[t.idx[1]], &A.beta, &b.s[t.idx[2]]});
    out += outer(b.e[t.idx[0]], r) * t.c;
  }
  return out;
}

// q~ = sum S(Phi1) alpha Phi2 (x) Phi3.
Tensor q_tilde_element(const QuasiHopfAlgebra& A, const Basis& b) {
  Tensor out(A.dim, 2);
  for (const Term& t : terms(A.phi)) {
    const Tensor l = prod(A, {&b.s[t.idx[0]], &A.alpha, &b.e[t.idx[1]]});
    out += outer(l, b.e[t.idx[2]]) * t.c;
  }
  return out;
}

void set_column(ExactMatrix& m, int col, const Tensor& t) { m.set_col(col, t.coeffs()); }

}  // namespace

ExactMatrix tensor_matrix(const Tensor& t) {
  const int n = t.dim();
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(j, i) = t.at({i, j});
  return m;
}

CoendMaps coend_maps(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  const Basis b(A);
  CoendMaps maps;
  const Tensor f = drinfeld_twist(A).f;
  const Tensor u_tilde = drinfeld_element(A).u_tilde;

  // mu_hat. U has legs [Psi~1, Psi1 R2' Psi~3', Psi2 R2'' Psi~3'', Psi3 R1 Psi~2].
  const Tensor psi = embed(A.phi_inv, 4, {2, 3, 4});
  const Tensor rexp = place(coproduct_leg(A.R, 2, A.coproduct), 4, {4, 2, 3});
  const Tensor ptil = place(coproduct_leg(A.phi_inv, 3, A.coproduct), 4, {1, 4, 2, 3});
  const Tensor U = prod(A, {&psi, &rexp, &ptil});
  const std::vector<Term> phi_t = terms(A.phi), u_t = terms(U);
  struct Side {
    Tensor left, right;  // left includes f
    Scalar c;
    int r;
  };
  std::vector<Side> sides;
  for (const Term& p : phi_t)
    for (const Term& u : u_t) {
      const Tensor l1 = antipode(A, prod(A, b.e[p.idx[1]], b.e[u.idx[1]]));
      const Tensor l2 = antipode(A, prod(A, b.e[p.idx[0]], b.e[u.idx[0]]));
      sides.push_back({prod(A, outer(l1, l2), f), outer(b.e[u.idx[2]], b.e[u.idx[3]]), p.c * u.c, p.idx[2]});
    }
  std::vector<Tensor> mu(n);
  parallel_for(n, [&](std::size_t x) {
    Tensor acc(n, 2);
    std::vector<std::optional<Tensor>> cop(n);
    for (const Side& s : sides) {
      if (!cop[s.r]) cop[s.r] = coproduct(A, prod(A, b.e[x], b.e[s.r]));
      acc += prod(A, {&s.left, &*cop[s.r], &s.right}) * s.c;
    }
    mu[x] = acc;
  });
  maps.mu_hat = ExactMatrix(n * n, n);
  for (int x = 0; x < n; ++x) set_column(maps.mu_hat, x, mu[x]);

  // delta_hat(a (x) b) = sum S(D1) b D2 S(D3) a D4.
  const Tensor dphi = coproduct_leg(A.phi, 3, A.coproduct);
  const Tensor beta2 = embed(A.beta, 4, {2});
  maps.D = prod(A, {&dphi, &psi, &beta2});
  const std::vector<Term> d_t = terms(maps.D);
  maps.delta_hat = ExactMatrix(n, n * n);
  parallel_for(static_cast<std::size_t>(n) * n, [&](std::size_t xy) {
    const int x = static_cast<int>(xy) / n, y = static_cast<int>(xy) % n;
    Tensor acc(n, 1);
    for (const Term& d : d_t)
      acc += prod(A, {&b.s[d.idx[0]], &b.e[y], &b.e[d.idx[1]], &b.s[d.idx[2]], &b.e[x], &b.e[d.idx[3]]}) * d.c;
    set_column(maps.delta_hat, static_cast<int>(xy), acc);
  });

  maps.eta_hat.resize(n);
  for (int x = 0; x < n; ++x) maps.eta_hat[x] = counit(A, prod(A, A.beta, b.e[x]));
  maps.eps_hat = A.alpha;

  // S_L_hat(a) = sum S(a R1) u~ R2.
  maps.s_hat_L = ExactMatrix(n, n);
  const std::vector<Term> r_t = terms(A.R);
  for (int x = 0; x < n; ++x) {
    Tensor acc(n, 1);
    for (const Term& r : r_t) {
      const Tensor s = antipode(A, prod(A, b.e[x], b.e[r.idx[0]]));
      acc += prod(A, {&s, &u_tilde, &b.e[r.idx[1]]}) * r.c;
    }
    set_column(maps.s_hat_L, x, acc);
  }

  maps.W = w_element(A);
  maps.omega_hat = pairing_contract(A, b, maps.W);
  maps.X_Q = x_q_element(A);
  maps.X_D = x_d_element(A, b);
  return maps;
}

CoendMaps hopf_coend_maps(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  const Basis b(A);
  CoendMaps maps;
  const DrinfeldElement de = drinfeld_element(A);
  const Tensor r3 = coproduct_leg(A.R, 2, A.coproduct);  // R1, R2', R2''
  const std::vector<Term> r3_t = terms(r3), r_t = terms(A.R);
  maps.mu_hat = ExactMatrix(n * n, n);
  for (int x = 0; x < n; ++x) {
    const Tensor dx = coproduct(A, b.e[x]);
    Tensor acc(n, 2);
    for (const Term& r : r3_t) {
      const Tensor l = outer(b.s[r.idx[1]], one(A));
      const Tensor rt = outer(b.e[r.idx[2]], b.e[r.idx[0]]);
      acc += prod(A, {&l, &dx, &rt}) * r.c;
    }
    set_column(maps.mu_hat, x, acc);
  }
  maps.delta_hat = ExactMatrix(n, n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) set_column(maps.delta_hat, x * n + y, prod(A, b.e[y], b.e[x]));
  maps.eta_hat = A.counit;
  maps.eps_hat = one(A);
  maps.s_hat_L = ExactMatrix(n, n);
  for (int x = 0; x < n; ++x) {
    Tensor acc(n, 1);
    for (const Term& r : r_t) {
      const Tensor s = antipode(A, prod(A, {&de.u_inv, &b.e[x], &b.e[r.idx[0]]}));
      acc += prod(A, s, b.e[r.idx[1]]) * r.c;
    }
    set_column(maps.s_hat_L, x, acc);
  }
  Tensor om(n, 2);
  for (const Term& m : terms(monodromy(A))) om += outer(b.s[m.idx[1]], b.e[m.idx[0]]) * m.c;
  maps.omega_hat = om;
  maps.D = Tensor::unit(n, 4);
  maps.W = embed(monodromy(A), 4, {2, 3});
  maps.X_Q = maps.W;
  maps.X_D = Tensor::unit(n, 2);
  return maps;
}

Tensor d_hat(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  // sum S(X2') w1 X2'' (x) S(X1') w2 X1''
  const Basis b(A);
  const Tensor x4 = coproduct_leg(coproduct_leg(maps.X_D, 1, A.coproduct), 3, A.coproduct);
  const std::vector<Term> x_t = terms(x4), w_t = terms(maps.omega_hat);
  Tensor out(A.dim, 2);
  for (const Term& x : x_t)
    for (const Term& w : w_t) {
      const Tensor l = prod(A, {&b.s[x.idx[2]], &b.e[w.idx[0]], &b.e[x.idx[3]]});
      const Tensor r = prod(A, {&b.s[x.idx[0]], &b.e[w.idx[1]], &b.e[x.idx[1]]});
      out += outer(l, r) * (x.c * w.c);
    }
  return out;
}

Tensor d_hat_from_omega(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  // sum S(W3 X2') W4 X2'' (x) S(W1 X1') W2 X1''
  const Basis b(A);
  const Tensor x4 = coproduct_leg(coproduct_leg(maps.X_D, 1, A.coproduct), 3, A.coproduct);
  return pairing_contract(A, b, prod(A, maps.W, x4));
}

Tensor m_bt(const QuasiHopfAlgebra& A) {
  const Basis b(A);
  const Tensor p = x_d_element(A, b);
  const Tensor q3 = coproduct_leg(q_tilde_element(A, b), 2, A.coproduct);
  const Tensor m = embed(monodromy(A), 3, {1, 2});
  const Tensor k = prod(A, A.phi_inv, m);  // Psi1 R2 R~1 (x) Psi2 R1 R~2 (x) Psi3
  const Tensor y = prod(A, q3, k);
  Tensor out(A.dim, 2);
  const Tensor one1 = one(A);
  for (const Term& t : terms(y)) {
    const Tensor l = outer(b.e[t.idx[0]], b.e[t.idx[1]]);
    const Tensor r = outer(one1, b.s[t.idx[2]]);
    out += prod(A, {&l, &p, &r}) * t.c;
  }
  return out;
}

Tensor m_bt_alternative(const QuasiHopfAlgebra& A) {
  const Basis b(A);
  const Tensor a2 = embed(A.alpha, 4, {2});
  const Tensor dphi = coproduct_leg(A.phi, 3, A.coproduct);
  const Tensor m = embed(monodromy(A), 3, {1, 2});
  const Tensor inner = embed(prod(A, {&A.phi_inv, &m, &A.phi}), 4, {2, 3, 4});
  const Tensor b3 = embed(A.beta, 4, {3});
  const Tensor q = prod(A, {&a2, &dphi, &inner, &b3});
  Tensor out(A.dim, 2);
  for (const Term& t : terms(q))
    out += outer(prod(A, b.s[t.idx[0]], b.e[t.idx[1]]), prod(A, b.e[t.idx[2]], b.s[t.idx[3]])) * t.c;
  return out;
}

ExactMatrix q_hat(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  const Basis b(A);
  const std::vector<Term> x_t = terms(x_q_element(A));
  ExactMatrix q(n * n, n * n);
  parallel_for(static_cast<std::size_t>(n) * n, [&](std::size_t xy) {
    const int x = static_cast<int>(xy) / n, y = static_cast<int>(xy) % n;
    Tensor acc(n, 2);
    for (const Term& t : x_t) {
      const Tensor l = prod(A, {&b.s[t.idx[2]], &b.e[x], &b.e[t.idx[3]]});
      const Tensor r = prod(A, {&b.s[t.idx[0]], &b.e[y], &b.e[t.idx[1]]});
      acc += outer(l, r) * t.c;
    }
    q.set_col(static_cast<int>(xy), acc.coeffs());
  });
  return q;
}

std::vector<std::vector<Scalar>> coend_invariants(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  const AModule L = coadjoint_module(A);
  ExactMatrix st(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) st(i * n + r, c) = L.action[i](r, c) - (r == c ? A.counit[i] : Scalar());
  return kernel(st);
}

std::vector<std::vector<Scalar>> coend_coinvariants(const QuasiHopfAlgebra& A) {
  const int n = A.dim;
  const AModule L = coadjoint_module(A);
  ExactMatrix st(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) st(i * n + r, c) = L.action[i](c, r) - (r == c ? A.counit[i] : Scalar());
  return kernel(st);
}

FactorisabilityReport factorisability(const QuasiHopfAlgebra& A) {
  const Basis b(A);
  CoendMaps maps;
  maps.W = w_element(A);
  maps.omega_hat = pairing_contract(A, b, maps.W);
  maps.X_D = x_d_element(A, b);
  return factorisability(A, maps);
}

FactorisabilityReport factorisability(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  FactorisabilityReport rep;
  const int n = A.dim;
  rep.dim = n;
  rep.d_hat_L = d_hat(A, maps);
  rep.d_hat_L_alternative = d_hat_from_omega(A, maps);
  rep.d_routes_agree = rep.d_hat_L == rep.d_hat_L_alternative;
  rep.rank_D = rank(tensor_matrix(rep.d_hat_L));
  rep.m_bt = m_bt(A);
  rep.m_bt_alternative = m_bt_alternative(A);
  rep.bt_routes_agree = rep.m_bt == rep.m_bt_alternative;
  rep.rank_BT = rank(tensor_matrix(rep.m_bt));

  const auto inv = coend_invariants(A);
  rep.invariants_dim = static_cast<int>(inv.size());
  rep.coinvariants_dim = static_cast<int>(coend_coinvariants(A).size());
  // Phi |-> omega_L(phi (x) -) as an element of A: x_j = sum_i omega_hat(j, i) phi_i.
  if (!inv.empty()) {
    ExactMatrix om(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) om(j, i) = maps.omega_hat.at({j, i});
    rep.omega_iso_rank = rank(om * from_columns(inv, n));
  }
  rep.d_test = rep.rank_D == n;
  rep.bt_test = rep.rank_BT == n;
  rep.omega_test = rep.omega_iso_rank == rep.invariants_dim && rep.invariants_dim == rep.coinvariants_dim;
  rep.tests_agree = rep.d_test == rep.bt_test && rep.bt_test == rep.omega_test;
  rep.is_factorisable = rep.d_test && rep.bt_test && rep.omega_test;
  return rep;
}

// Categorical oracle.

namespace {

struct Piece {
  const AModule* mod;  // the module M
  const AModule* dual;
  std::vector<Scalar> vec;  // vector in M* M
  std::vector<Scalar> img;  // iota_M(vec)
};

std::vector<Scalar> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v[i] = 1;
  return v;
}

std::vector<Scalar> kron_vec(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

ExactMatrix iota_matrix(const QuasiHopfAlgebra& A, const AModule& M) {
  const int d = M.dim;
  ExactMatrix m(A.dim, d * d);
  for (int i = 0; i < A.dim; ++i)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) m(i, p * d + q) = M.action[i](p, q);
  return m;
}

// X with X * B = C, where the columns of B span the domain.
ExactMatrix solve_on_span(const std::vector<std::vector<Scalar>>& in, const std::vector<std::vector<Scalar>>& out,
                          int in_dim, int out_dim) {
  ExactMatrix B = from_columns(in, in_dim);
  auto binv = inverse(B);
  if (!binv) throw std::runtime_error("oracle inputs do not span the coend");
  return from_columns(out, out_dim) * *binv;
}

}  // namespace

CoendMorphisms categorical_coend_morphisms(const QuasiHopfAlgebra& A, const std::vector<AModule>& family) {
  const int n = A.dim;
  std::vector<AModule> mods = family.empty() ? std::vector<AModule>{regular_module(A)} : family;
  std::vector<AModule> duals;
  duals.reserve(mods.size());
  for (const AModule& M : mods) duals.push_back(dual_module(A, M));

  // Greedy choice of vectors in M* M whose images under iota form a basis of L.
  std::vector<Piece> pieces;
  {
    ExactMatrix acc(n, 0);
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t k = 0; k < mods.size() && static_cast<int>(cols.size()) < n; ++k) {
      const ExactMatrix io = iota_matrix(A, mods[k]);
      const int d = mods[k].dim;
      for (int c = 0; c < d * d && static_cast<int>(cols.size()) < n; ++c) {
        auto trial = cols;
        trial.push_back(io.col(c));
        if (rank(from_columns(trial, n)) == static_cast<int>(trial.size())) {
          cols = trial;
          pieces.push_back({&mods[k], &duals[k], unit_vector(static_cast<std::size_t>(d) * d, c), io.col(c)});
        }
      }
    }
    if (static_cast<int>(pieces.size()) != n) throw std::runtime_error("module family does not span the coend");
  }

  CoendMorphisms m{ExactMatrix(n, n * n), ExactMatrix(n, 1), ExactMatrix(n * n, n),
                   ExactMatrix(1, n),     ExactMatrix(n, n), ExactMatrix(1, n * n)};
  std::vector<std::vector<Scalar>> in1, eps_out, delta_out, s_out;
  for (const Piece& p : pieces) {
    const AModule& M = *p.mod;
    const AModule& Md = *p.dual;
    const int d = M.dim;
    in1.push_back(p.img);
    eps_out.push_back(ev(A, M) * p.vec);

    // Delta_L iota_M: coev inserted, inverse associator, associator, iota (x) iota.
    const AModule MdM = tensor_module(A, Md, M);
    std::vector<Scalar> w = apply_mid(coev(A, M), d, d, p.vec);
    w = act_apply(A, A.phi_inv, {&M, &Md, &M}, w, d, 1);
    w = act_apply(A, A.phi, {&Md, &M, &MdM}, w);
    const ExactMatrix io = iota_matrix(A, M);
    w = apply_mid(io, 1, d * d, w);
    w = apply_mid(io, n, 1, w);
    delta_out.push_back(w);

    // S_L iota_M: braiding, tilde Drinfeld iso, iota of M*.
    std::vector<Scalar> s = braiding(A, Md, M) * p.vec;
    s = apply_mid(drinfeld_iso_tilde(A, M), 1, d, s);
    s_out.push_back(iota_matrix(A, Md) * s);
  }
  m.eps = solve_on_span(in1, eps_out, n, 1);
  m.delta = solve_on_span(in1, delta_out, n, n * n);
  m.S = solve_on_span(in1, s_out, n, n);

  // Unit: 1 -> 1* 1 via the inverse of ev_1, then iota_1.
  {
    const AModule one_m = trivial_module(A);
    const Scalar ev1 = ev(A, one_m)(0, 0);
    const ExactMatrix io = iota_matrix(A, one_m);
    for (int i = 0; i < n; ++i) m.eta(i, 0) = io(i, 0) / ev1;
  }

  // Multiplication and pairing on pairs of pieces; per-module-pair data cached.
  struct PairData {
    AModule VdV, VU;
    ExactMatrix double_braid, gamma, iota_vu;
  };
  std::map<std::pair<const AModule*, const AModule*>, PairData> cache;
  auto pair_data = [&](const Piece& pu, const Piece& pv) -> const PairData& {
    auto key = std::make_pair(pu.mod, pv.mod);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const AModule &U = *pu.mod, &Ud = *pu.dual, &V = *pv.mod, &Vd = *pv.dual;
    (void)Ud;
    PairData pd{tensor_module(A, Vd, V), tensor_module(A, V, U), {}, {}, {}};
    pd.double_braid = braiding(A, Vd, U) * braiding(A, U, Vd);
    pd.gamma = gamma_iso(A, V, U);
    pd.iota_vu = iota_matrix(A, pd.VU);
    return cache.emplace(key, std::move(pd)).first->second;
  };
  std::vector<std::vector<Scalar>> in2, mu_out, om_out;
  for (const Piece& pu : pieces)
    for (const Piece& pv : pieces) {
      const AModule &U = *pu.mod, &Ud = *pu.dual, &V = *pv.mod, &Vd = *pv.dual;
      const int du = U.dim, dv = V.dim;
      const PairData& pd = pair_data(pu, pv);
      in2.push_back(kron_vec(pu.img, pv.img));
      const std::vector<Scalar> start = kron_vec(pu.vec, pv.vec);
      const std::vector<Scalar> head = act_apply(A, A.phi_inv, {&Ud, &U, &pd.VdV}, start);

      std::vector<Scalar> w(head.size());
      for (int a = 0; a < du; ++a) {
        const std::size_t block = static_cast<std::size_t>(du) * dv * dv;
        std::vector<Scalar> part(head.begin() + a * block, head.begin() + (a + 1) * block);
        part = braiding_apply(A, U, pd.VdV, part);
        std::move(part.begin(), part.end(), w.begin() + a * block);
      }
      w = act_apply(A, A.phi_inv, {&Vd, &V, &U}, w, du, 1);
      w = act_apply(A, A.phi, {&Ud, &Vd, &pd.VU}, w);
      w = apply_mid(pd.gamma, 1, dv * du, w);
      mu_out.push_back(pd.iota_vu * w);

      std::vector<Scalar> o = act_apply(A, A.phi, {&U, &Vd, &V}, head, du, 1);
      o = apply_mid(pd.double_braid, du, dv, o);
      o = act_apply(A, A.phi_inv, {&U, &Vd, &V}, o, du, 1);
      o = apply_mid(ev(A, V), du * du, 1, o);
      om_out.push_back(ev(A, U) * o);
    }
  m.mu = solve_on_span(in2, mu_out, n * n, n);
  m.omega = solve_on_span(in2, om_out, n * n, 1);
  return m;
}

}  // namespace qhopf
