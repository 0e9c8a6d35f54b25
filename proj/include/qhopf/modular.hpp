// Centre, integrals and cointegrals, and the projective SL(2, Z) action on
// A and on the centre. Normalisations that would need a square root are
// never taken; identities are checked in their scale-corrected forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/coend.hpp"

namespace qhopf {

using Vector = std::vector<Scalar>;

/// Basis of Z(A), the kernel of x |-> e_i x - x e_i for all i.
std::vector<Vector> center(const QuasiHopfAlgebra& A);

struct IntegralResult {
  std::vector<Vector> solutions;  // basis of the two-sided solution space in A*
  std::optional<Vector> lambda_hat;  // the first basis vector when the space is 1-dimensional
  Scalar k;  // (lambda (x) lambda)(omega_hat); zero when lambda_hat is absent
  int dimension() const { return static_cast<int>(solutions.size()); }
};

/// Solves (id (x) L)mu_hat(a) = alpha L(a) = (L (x) id)mu_hat(a).
IntegralResult integral_L(const QuasiHopfAlgebra& A, const CoendMaps& maps);

struct CointegralResult {
  std::vector<Vector> left, right, two_sided;
  std::optional<Vector> c;  // two-sided, scaled so that lambda_hat(c) = 1 when possible
  Scalar lambda_of_c;       // lambda_hat(c) before rescaling
  bool normalised = false;
};

/// Left, right and two-sided integrals of A; c is rescaled against lambda_hat.
CointegralResult cointegral_L(const QuasiHopfAlgebra& A, const std::optional<Vector>& lambda_hat);

/// Both conditions delta_hat(c (x) a) = c eps(beta a) = delta_hat(a (x) c).
bool satisfies_cointegral_conditions(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& c);

struct STHat {
  ExactMatrix S_hat;       // column x = S_hat(e_x), from Q_hat
  ExactMatrix S_hat_pair;  // the same from Delta_hat, omega_hat and Phi
  ExactMatrix T_hat;       // left multiplication by v^-1
  bool routes_agree = false;
  bool invariants_form_agrees = false;  // restriction to coadjoint invariants
  bool alpha_center_form_agrees = false;  // restriction to alpha Z(A)
};

STHat s_t_hat(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& lambda_hat);

/// x |-> sum S(v') x v''.
ExactMatrix k_of(const QuasiHopfAlgebra& A, const Tensor& v);

struct SL2ZOnCenter {
  ExactMatrix S_Z, T_Z;  // in center-basis coordinates
  ExactMatrix S_Z_on_A;  // column x = S_Z applied to e_x
  bool preserves_center = false;
  std::optional<Scalar> lambda;  // (S_Z T_Z)^3 = lambda S_Z^2
};

/// S_Z(z) = sum Psi1 beta S(Psi2) w1 Psi3 L(Delta_hat(w2 (x) alpha z)); T_Z(z) = v^-1 z.
SL2ZOnCenter sl2z_on_center(const QuasiHopfAlgebra& A, const CoendMaps& maps, const Vector& lambda_hat,
                            const std::vector<Vector>& center_basis);

/// Coordinates of x in the given basis, if x lies in its span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& x);

/// Exact t with a = t b for nonzero b, if it exists.
std::optional<Scalar> proportionality(const ExactMatrix& a, const ExactMatrix& b);

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModularData {
  std::vector<Vector> center_basis;
  IntegralResult integral;
  CointegralResult cointegral;
  std::optional<STHat> st;
  std::optional<SL2ZOnCenter> sl2z;
  std::optional<Scalar> lambda_hat;  // from (S_hat T_hat)^3 = lambda S_hat^2
  std::string lambda_note;
  std::vector<RelationCheck> relations;
  bool all_relations_hold() const;
};

/// Runs the whole pipeline; relation checks are recorded, not thrown.
ModularData modular_data(const QuasiHopfAlgebra& A, const CoendMaps& maps);

}  // namespace qhopf
