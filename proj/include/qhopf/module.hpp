// Finite-dimensional left modules given by action matrices.
#pragma once

#include <string>
#include <vector>

#include "qhopf/matrix.hpp"

namespace qhopf {

struct AModule {
  std::string label;
  int dim = 0;
  std::vector<ExactMatrix> action;  // action[i] = rho(e_i), dim x dim
};

}  // namespace qhopf
