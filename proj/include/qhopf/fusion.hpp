// Internal characters as central elements, and fusion rules from their
// products, cross-checked against a character-theoretic decomposition.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/module.hpp"
#include "qhopf/modular.hpp"

namespace qhopf {

struct SimpleSet {
  std::vector<AModule> simples;
  std::vector<Vector> characters;  // characters[s][i] = tr_S(e_i)
  int radical_dim = 0;
  bool characters_independent = false;
  bool complete = false;  // sum dim(S)^2 = dim A - dim rad A
};

/// Trace functional of a module.
Vector character(const QuasiHopfAlgebra& A, const AModule& M);

/// Dimension of the kernel of the regular trace form (x, y) |-> tr(L_xy).
int radical_dimension(const QuasiHopfAlgebra& A);

SimpleSet make_simple_set(const QuasiHopfAlgebra& A, std::vector<AModule> simples);

/// sum tr_V(u^-1 v S(Psi2 M2 Phi2 beta) alpha Psi3 Phi3) Psi1 M1 Phi1. Throws if not central.
Vector chi_central(const QuasiHopfAlgebra& A, const AModule& V);

/// sum F1 tr_V(u^-1 v F2) built from the cointegral c. Throws if not central.
Vector phi_central(const QuasiHopfAlgebra& A, const AModule& V, const Vector& c);

/// Multiplicities of the simples in M, from characters. Throws std::runtime_error
/// when there is no solution or it is not a non-negative integer vector.
std::vector<long> grothendieck_class(const QuasiHopfAlgebra& A, const AModule& M, const SimpleSet& S);

struct FusionTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<long>>> N;  // N[u][v][w]
  std::vector<std::vector<std::vector<long>>> oracle;  // empty when skipped
  bool oracle_run = false;
  bool matches_oracle = false;
  bool unit_column = false;  // N[unit][v][w] = delta(v, w)
  bool symmetric = false;    // N[u][v][w] = N[v][u][w]
};

/// Expands chi_U chi_V in the chi basis. Throws std::runtime_error when the
/// chi values are dependent or a coefficient is not a non-negative integer.
FusionTable verlinde_fusion(const QuasiHopfAlgebra& A, const SimpleSet& S, bool run_oracle = true);

/// True when x commutes with every basis element.
bool is_central(const QuasiHopfAlgebra& A, const Vector& x);

}  // namespace qhopf
