// Built-in example algebras, shipped as definition files compiled into the
// library, and single-entry mutations for negative tests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/format.hpp"

namespace qhopf {

/// Names of the shipped presets, sorted.
std::vector<std::string> preset_names();

/// Parses the named preset; throws std::invalid_argument for unknown names.
AlgebraFile preset(const std::string& name, std::optional<int> field_order = std::nullopt);

/// The raw definition text of a preset.
const std::string& preset_source(const std::string& name);

/// One structure-constant entry: section is one of mult, counit, coproduct,
/// antipode, phi, alpha, beta, R, ribbon; indices follow the file format.
struct MutationSite {
  std::string section;
  std::vector<int> indices;
  std::string str() const;
};

/// Every site holding a nonzero entry, in a fixed order.
std::vector<MutationSite> nonzero_sites(const QuasiHopfAlgebra& A);

/// Adds delta at the site. Stored inverses of a mutated phi, R or ribbon are
/// re-derived when the new element is invertible. No validation is run.
QuasiHopfAlgebra mutate(const QuasiHopfAlgebra& A, const MutationSite& site, const Scalar& delta);

}  // namespace qhopf
