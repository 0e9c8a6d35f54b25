#include "qhopf/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhopf {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& preset_sources();
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::preset_sources()) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

const std::string& preset_source(const std::string& name) {
  for (const auto& [n, text] : detail::preset_sources())
    if (n == name) return text;
  throw std::invalid_argument("unknown preset: " + name);
}

AlgebraFile preset(const std::string& name, std::optional<int> field_order) {
  return parse_algebra(preset_source(name), field_order);
}

std::string MutationSite::str() const {
  std::string s = section;
  for (int i : indices) s += " " + std::to_string(i);
  return s;
}

namespace {

void tensor_sites(const std::string& section, const Tensor& t, std::vector<MutationSite>& out) {
  t.for_each_nonzero([&](const Index& idx, const Scalar&) {
    out.push_back({section, std::vector<int>(idx.begin(), idx.begin() + t.legs())});
  });
}

Scalar& tensor_entry(Tensor& t, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != t.legs()) throw std::invalid_argument("mutation index arity mismatch");
  Index i{};
  for (std::size_t l = 0; l < idx.size(); ++l) {
    if (idx[l] < 0 || idx[l] >= t.dim()) throw std::out_of_range("mutation index out of range");
    i[l] = idx[l];
  }
  return t[t.flat(i)];
}

void check_range(const QuasiHopfAlgebra& A, const std::vector<int>& idx, std::size_t arity) {
  if (idx.size() != arity) throw std::invalid_argument("mutation index arity mismatch");
  for (int i : idx)
    if (i < 0 || i >= A.dim) throw std::out_of_range("mutation index out of range");
}

}  // namespace

std::vector<MutationSite> nonzero_sites(const QuasiHopfAlgebra& A) {
  std::vector<MutationSite> out;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, v] : A.mult.product(i, j)) out.push_back({"mult", {i, j, k}});
  for (int i = 0; i < A.dim; ++i)
    if (!A.counit[i].is_zero()) out.push_back({"counit", {i}});
  for (int i = 0; i < A.dim; ++i)
    A.coproduct[i].for_each_nonzero([&](const Index& idx, const Scalar&) {
      out.push_back({"coproduct", {i, idx[0], idx[1]}});
    });
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (!A.antipode(j, i).is_zero()) out.push_back({"antipode", {i, j}});
  tensor_sites("phi", A.phi, out);
  tensor_sites("alpha", A.alpha, out);
  tensor_sites("beta", A.beta, out);
  tensor_sites("R", A.R, out);
  if (A.ribbon) tensor_sites("ribbon", *A.ribbon, out);
  return out;
}

QuasiHopfAlgebra mutate(const QuasiHopfAlgebra& A, const MutationSite& site, const Scalar& delta) {
  QuasiHopfAlgebra B = A;
  const auto& ix = site.indices;
  if (site.section == "mult") {
    check_range(A, ix, 3);
    B.mult.set(ix[0], ix[1], ix[2], B.mult.coefficient(ix[0], ix[1], ix[2]) + delta);
  } else if (site.section == "counit") {
    check_range(A, ix, 1);
    B.counit[ix[0]] += delta;
  } else if (site.section == "coproduct") {
    check_range(A, ix, 3);
    B.coproduct[ix[0]].at({ix[1], ix[2]}) += delta;
  } else if (site.section == "antipode") {
    check_range(A, ix, 2);
    B.antipode(ix[1], ix[0]) += delta;
  } else if (site.section == "phi") {
    tensor_entry(B.phi, ix) += delta;
    if (auto inv = invert(B, B.phi)) B.phi_inv = *inv;
  } else if (site.section == "alpha") {
    tensor_entry(B.alpha, ix) += delta;
  } else if (site.section == "beta") {
    tensor_entry(B.beta, ix) += delta;
  } else if (site.section == "R") {
    tensor_entry(B.R, ix) += delta;
    if (auto inv = invert(B, B.R)) B.R_inv = *inv;
  } else if (site.section == "ribbon") {
    if (!B.ribbon) throw std::invalid_argument("algebra has no ribbon element");
    tensor_entry(*B.ribbon, ix) += delta;
    if (auto inv = invert(B, *B.ribbon)) B.ribbon_inv = *inv;
  } else {
    throw std::invalid_argument("unknown mutation section: " + site.section);
  }
  // Kept a single token so the mutated data serialises to a valid file.
  B.name = A.name + "_mutated_" + site.section;
  for (int i : site.indices) B.name += "_" + std::to_string(i);
  return B;
}

}  // namespace qhopf
