// Text format for algebra definitions.
//
//   qha 1
//   name double_Z2
//   dim 4
//   order 1
//   flags char0
//   expect factorisable hopf semisimple
//   [mult]
//   1 1 0 = 1          # e_1 e_1 = e_0
//   [simples]
//   module sign 1
//   0 0 0 = 1          # rho(e_0)[0][0]
//
// Section entries are `indices = scalar`, omitted entries are zero:
//   mult i j k, counit i, coproduct i j k (Delta(e_i) on e_j (x) e_k),
//   antipode i j (S(e_i) on e_j), phi/phi_inv i j k, alpha/beta i,
//   R/R_inv i j, ribbon/ribbon_inv i, and inside [simples] `i r c`.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/module.hpp"

namespace qhopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), line(line), column(column) {}
  int line;    // 1-based, 0 when not tied to a line
  int column;  // 1-based, 0 when not tied to a column

 private:
  static std::string format(const std::string& msg, int line, int column);
};

struct AlgebraFile {
  QuasiHopfAlgebra algebra;
  std::vector<std::string> flags;   // e.g. char0
  std::vector<std::string> expect;  // e.g. factorisable, hopf, semisimple
  std::vector<AModule> simples;

  bool has_flag(const std::string& f) const;
  bool expects(const std::string& f) const;
};

/// Parses definition text. When field_order is given it must be a multiple
/// of the declared order and all data is embedded into Q(zeta_field_order).
AlgebraFile parse_algebra(const std::string& text, std::optional<int> field_order = std::nullopt);
AlgebraFile parse_algebra_file(const std::string& path, std::optional<int> field_order = std::nullopt);

/// Canonical text: fixed section order, entries sorted, zeros omitted.
std::string serialise(const AlgebraFile& f);

}  // namespace qhopf
