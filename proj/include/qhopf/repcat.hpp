// Rep A: modules, tensor products, duals and the structure morphisms as
// exact matrices.
//
// Flat index conventions: U (x) V has basis index u * dim V + v; U* uses
// the dual basis, so index i of U* is the functional u_i^*.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/module.hpp"

namespace qhopf {

using ModulePtr = std::shared_ptr<const AModule>;

struct Morphism {
  ModulePtr source, target;
  ExactMatrix matrix;
};

/// Builds a morphism; with strict set it throws std::runtime_error unless
/// the matrix intertwines the two actions.
Morphism make_morphism(const QuasiHopfAlgebra& A, ModulePtr source, ModulePtr target, ExactMatrix matrix,
                       bool strict = true);

AModule trivial_module(const QuasiHopfAlgebra& A);
AModule regular_module(const QuasiHopfAlgebra& A);
AModule tensor_module(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V);
AModule dual_module(const QuasiHopfAlgebra& A, const AModule& U);
AModule direct_sum(const AModule& U, const AModule& V);

/// First (i, j) with rho(e_i) rho(e_j) != sum_k c[i][j][k] rho(e_k); (-1, -1)
/// when rho(e_0) is not the identity.
std::optional<std::pair<int, int>> representation_defect(const QuasiHopfAlgebra& A, const AModule& M);

/// Action of t in A^{(x)k} on M_1 (x) ... (x) M_k.
ExactMatrix act(const QuasiHopfAlgebra& A, const Tensor& t, const std::vector<const AModule*>& modules);
ExactMatrix act(const QuasiHopfAlgebra& A, const Tensor& a, const AModule& M);
bool intertwines(const ExactMatrix& f, const AModule& source, const AModule& target);

/// (I_left (x) M (x) I_right) v without forming the Kronecker product.
std::vector<Scalar> apply_mid(const ExactMatrix& M, int left, int right, const std::vector<Scalar>& v);
/// (I_pad_left (x) act(A, t, modules) (x) I_pad_right) v without forming the matrix.
std::vector<Scalar> act_apply(const QuasiHopfAlgebra& A, const Tensor& t, const std::vector<const AModule*>& modules,
                              const std::vector<Scalar>& v, int pad_left = 1, int pad_right = 1);

/// U (x) V -> V (x) U.
ExactMatrix flip(int dim_u, int dim_v);
/// c_{U,V} applied to a vector of U V without building the matrix.
std::vector<Scalar> braiding_apply(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V,
                                   const std::vector<Scalar>& v);

// Structure morphisms. Associators go U(VW) -> (UV)W.
ExactMatrix associator(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V, const AModule& W);
ExactMatrix associator_inv(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V, const AModule& W);
ExactMatrix braiding(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V);
ExactMatrix braiding_inv(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V);  // V U -> U V
ExactMatrix ev(const QuasiHopfAlgebra& A, const AModule& U);    // U* U -> 1
ExactMatrix coev(const QuasiHopfAlgebra& A, const AModule& U);  // 1 -> U U*

/// Ribbon data, derived once.
struct RibbonElements {
  Tensor v, v_inv, u, u_inv, u_tilde;
};
RibbonElements ribbon_elements(const QuasiHopfAlgebra& A);  // requires ribbon

ExactMatrix ev_right(const QuasiHopfAlgebra& A, const RibbonElements& r, const AModule& U);    // U U* -> 1
ExactMatrix coev_right(const QuasiHopfAlgebra& A, const RibbonElements& r, const AModule& U);  // 1 -> U* U
ExactMatrix twist(const QuasiHopfAlgebra& A, const RibbonElements& r, const AModule& U);
ExactMatrix pivotal(const QuasiHopfAlgebra& A, const RibbonElements& r, const AModule& U);  // U -> U**

/// Drinfeld's isomorphisms U -> U** evaluated from their categorical
/// composites (coev of U*, associator, (inverse) braiding, ev).
ExactMatrix drinfeld_iso(const QuasiHopfAlgebra& A, const AModule& U);
ExactMatrix drinfeld_iso_tilde(const QuasiHopfAlgebra& A, const AModule& U);

/// Canonical U* V* -> (V U)*, from its categorical definition.
ExactMatrix gamma_iso(const QuasiHopfAlgebra& A, const AModule& V, const AModule& U);

struct StructureMorphisms {
  Morphism associator, braiding, ev, coev;
  std::optional<Morphism> ev_right, coev_right, ribbon, pivotal;
};

/// Ribbon, pivotal and right duality entries are filled when A has ribbon
/// data; they stay empty otherwise.
StructureMorphisms structure_morphisms(const QuasiHopfAlgebra& A, const AModule& U, const AModule& V,
                                       const AModule& W);

/// L = A* with (a.phi)(h) = phi(S(a') h a'').
AModule coadjoint_module(const QuasiHopfAlgebra& A);
/// Gamma = A with a.h = a' h S(a'').
AModule adjoint_module(const QuasiHopfAlgebra& A);
/// E*: (Gamma)* -> L, E(a) = sum S^-1(f' a S(f'')).
Morphism E_iso(const QuasiHopfAlgebra& A);

/// iota_M: M* M -> L, phi (x) m |-> (a |-> phi(a.m)).
Morphism iota(const QuasiHopfAlgebra& A, const AModule& M);
/// j_M: Gamma -> M M*, a |-> sum (a.m_i) (x) m_i^*.
Morphism j_end(const QuasiHopfAlgebra& A, const AModule& M);

/// X* X -> Y Y*: coev_Y, associator, double braiding on X Y, inverse
/// associator, associator, ev_X.
Morphism hopf_tangle(const QuasiHopfAlgebra& A, const AModule& X, const AModule& Y);

struct CoendMaps;

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;
  bool skipped = false;  // not applicable to this algebra; counts as passed
};

struct BraidedHopfReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Structure maps of L from the element-level maps, with the flipped
/// contraction <f (x) g, a (x) b> = f(b) g(a).
struct CoendMorphisms {
  ExactMatrix mu, eta, delta, eps, S, omega;
};
CoendMorphisms coend_morphisms(const QuasiHopfAlgebra& A, const CoendMaps& maps);

/// Items (a)-(f): module maps, (co)associativity and (co)unit, bialgebra
/// compatibility, antipode, Hopf pairing, S_L^2 = theta_L.
BraidedHopfReport verify_braided_hopf(const QuasiHopfAlgebra& A, const CoendMaps& maps);

}  // namespace qhopf
