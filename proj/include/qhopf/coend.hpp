// The coend L = A* through element-level maps on A, the categorical oracle
// built from dinatural composites on the regular module, and the three
// factorisability tests.
#pragma once

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/repcat.hpp"

namespace qhopf {

/// Element-level ("hatted") structure maps on A.
struct CoendMaps {
  ExactMatrix mu_hat;     // n^2 x n, column x = mu_hat(e_x) flattened
  ExactMatrix delta_hat;  // n x n^2, column x*n+y = delta_hat(e_x (x) e_y)
  std::vector<Scalar> eta_hat;  // eta_hat(e_x)
  Tensor eps_hat;         // one leg
  ExactMatrix s_hat_L;    // column x = S_L_hat(e_x)
  Tensor omega_hat;       // two legs
  Tensor D, W, X_Q, X_D;  // auxiliary tensors
};

/// General quasi-Hopf formulas.
CoendMaps coend_maps(const QuasiHopfAlgebra& A);
/// The simplified formulas valid when Phi, alpha and beta are trivial.
CoendMaps hopf_coend_maps(const QuasiHopfAlgebra& A);

/// Structure maps of L computed from their defining categorical composites
/// (independent of the element-level formulas). The images of iota_M over the
/// family must span L; an empty family means the regular module.
CoendMorphisms categorical_coend_morphisms(const QuasiHopfAlgebra& A, const std::vector<AModule>& family = {});

/// The omega-induced map L -> L*, as an element of A (x) A (D_hat).
Tensor d_hat(const QuasiHopfAlgebra& A, const CoendMaps& maps);
/// The same element from the auxiliary tensor D_hat = sum S(X2')w1X2'' (x) S(X1')w2X1''.
Tensor d_hat_from_omega(const QuasiHopfAlgebra& A, const CoendMaps& maps);

/// Monodromy element M^BT behind the map Q^BT, from two independent formulas.
Tensor m_bt(const QuasiHopfAlgebra& A);
Tensor m_bt_alternative(const QuasiHopfAlgebra& A);

/// Q_hat: A (x) A -> A (x) A, column x*n+y = Q_hat(e_x (x) e_y).
ExactMatrix q_hat(const QuasiHopfAlgebra& A);

/// Matrix of a two-leg tensor t as the map a* |-> (a* (x) id)(t):
/// entry (j, i) = coefficient of e_i (x) e_j.
ExactMatrix tensor_matrix(const Tensor& t);

/// Invariants of L (module maps 1 -> L) and coinvariants (module maps L -> 1),
/// as bases of A* and A respectively.
std::vector<std::vector<Scalar>> coend_invariants(const QuasiHopfAlgebra& A);
std::vector<std::vector<Scalar>> coend_coinvariants(const QuasiHopfAlgebra& A);

struct FactorisabilityReport {
  int dim = 0;
  Tensor d_hat_L;              // from X_D and the pairing element
  Tensor d_hat_L_alternative;  // from W and X_D directly
  int rank_D = 0;
  Tensor m_bt;                 // displayed sum over p, q~, Phi^-1, R, R~
  Tensor m_bt_alternative;     // (mu (x) mu)(S (x) id (x) id (x) S)(Q)
  int rank_BT = 0;
  int invariants_dim = 0;      // dim C(1, L)
  int coinvariants_dim = 0;    // dim C(L, 1)
  int omega_iso_rank = 0;      // rank of a |-> omega_L(a (x) -) on C(1, L)
  bool d_routes_agree = false;
  bool bt_routes_agree = false;
  bool d_test = false;
  bool bt_test = false;
  bool omega_test = false;
  bool tests_agree = false;
  bool is_factorisable = false;  // all three tests passed
};

FactorisabilityReport factorisability(const QuasiHopfAlgebra& A, const CoendMaps& maps);
/// Same tests using only the pairing element, so no Drinfeld twist is needed.
FactorisabilityReport factorisability(const QuasiHopfAlgebra& A);

}  // namespace qhopf
