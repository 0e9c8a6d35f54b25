// Quasi-triangular (ribbon) quasi-Hopf algebras given by structure constants.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/matrix.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

/// Basis e_0, ..., e_{n-1} with e_0 = 1. Elements of A are one-leg tensors.
struct QuasiHopfAlgebra {
  std::string name;
  int dim = 0;
  int order = 1;  // ground field Q(zeta_order)
  MultTable mult;
  CounitTable counit;
  CoproductTable coproduct;
  ExactMatrix antipode;  // column j = S(e_j)
  Tensor phi, phi_inv;
  Tensor alpha, beta;
  Tensor R, R_inv;
  std::optional<Tensor> ribbon, ribbon_inv;
  // Inverses that were solved for instead of read from input.
  std::vector<std::string> computed;

  bool has_ribbon() const { return ribbon.has_value(); }
  /// Phi = 1(x)1(x)1 and alpha = beta = 1.
  bool is_hopf() const;
};

// Element-level helpers. All tensors have dim == A.dim.
Tensor one(const QuasiHopfAlgebra& A, int legs = 1);
Tensor basis_element(const QuasiHopfAlgebra& A, int i);
Tensor prod(const QuasiHopfAlgebra& A, const Tensor& a, const Tensor& b);
Tensor prod(const QuasiHopfAlgebra& A, std::initializer_list<const Tensor*> factors);
Tensor antipode(const QuasiHopfAlgebra& A, const Tensor& a);  // S on every leg
Tensor antipode_inverse(const QuasiHopfAlgebra& A, const Tensor& a);
Tensor coproduct(const QuasiHopfAlgebra& A, const Tensor& a);  // one leg -> two
Tensor coproduct_op(const QuasiHopfAlgebra& A, const Tensor& a);
Scalar counit(const QuasiHopfAlgebra& A, const Tensor& a);
/// Left multiplication by t on A^{(x)k}, in the flat tensor basis.
ExactMatrix left_multiplication(const QuasiHopfAlgebra& A, const Tensor& t);
/// Two-sided inverse in A^{(x)k}, if it exists.
std::optional<Tensor> invert(const QuasiHopfAlgebra& A, const Tensor& t);
ExactMatrix antipode_inverse_matrix(const QuasiHopfAlgebra& A);

/// Solves for phi_inv, R_inv and ribbon_inv when they are absent, noting
/// each one in A.computed. Throws if an element is not invertible.
void complete_inverses(QuasiHopfAlgebra& A);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<int> witness;  // first violating basis index tuple
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(const std::string& name) const;
};

AxiomReport validate(const QuasiHopfAlgebra& A);

struct DrinfeldTwist {
  Tensor f, f_inv, gamma;
};

/// Throws std::runtime_error if f is not invertible or the conjugation
/// identity f Delta(S(a)) f^-1 = (S(x)S)(Delta^op(a)) fails.
DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& A);

struct DrinfeldElement {
  Tensor u, u_tilde, u_inv;
  // true when u_inv came from S^-1(u_tilde) (ribbon case), false when solved
  bool u_inv_from_ribbon = false;
};

/// Throws std::runtime_error if u u_inv != 1 or S^2 != u(-)u^-1.
DrinfeldElement drinfeld_element(const QuasiHopfAlgebra& A);

/// M = R_21 R.
Tensor monodromy(const QuasiHopfAlgebra& A);

}  // namespace qhopf
