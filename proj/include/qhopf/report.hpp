// Deterministic JSON, Markdown and CSV renderings of every pipeline stage.
// Object keys are sorted and scalars are canonical literals in the
// algebra's field, so identical inputs give byte-identical output.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qhopf/algebra.hpp"
#include "qhopf/coend.hpp"
#include "qhopf/format.hpp"
#include "qhopf/fusion.hpp"
#include "qhopf/modular.hpp"

namespace qhopf {

using Json = nlohmann::json;

/// Invalid request for otherwise readable input (maps to exit status 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportOptions {
  bool projective = false;  // omit the notes on square-root normalisation
  bool oracle = true;       // run the character-theoretic fusion oracle
};

Json scalar_json(const Scalar& s, int order);
Json vector_json(const Vector& v, int order);
Json matrix_json(const ExactMatrix& m, int order);
Json tensor_json(const Tensor& t, int order);  // sparse, sorted by index

Json axioms_json(const AxiomReport& r);
Json derived_json(const QuasiHopfAlgebra& A);
Json coend_json(const QuasiHopfAlgebra& A, const CoendMaps& maps);
Json braided_hopf_json(const BraidedHopfReport& r);
Json factorisability_json(const QuasiHopfAlgebra& A, const FactorisabilityReport& r);
Json modular_json(const QuasiHopfAlgebra& A, const ModularData& md, const ReportOptions& opt);
Json fusion_json(const FusionTable& t);
std::string fusion_csv(const FusionTable& t);

/// Outcome of one command: a document plus the exit status it implies.
struct CommandResult {
  Json document;
  int status = 0;  // 0 success, 1 axiom failure
};

/// Runs check, derived, coend, factorisable, modular, fusion or report.
/// Every command other than check first validates and stops with status 1
/// on failure. Throws std::invalid_argument for an unknown command.
CommandResult run_command(const std::string& command, const AlgebraFile& file, const ReportOptions& opt);

/// Fusion table of a validated, factorisable file (used for CSV output).
FusionTable fusion_table(const AlgebraFile& file, const ReportOptions& opt);

/// Renders any report document as nested Markdown sections.
std::string to_markdown(const Json& doc, const std::string& title);

}  // namespace qhopf
