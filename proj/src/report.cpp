#include "qhopf/report.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/repcat.hpp"

namespace qhopf {

Json scalar_json(const Scalar& s, int order) { return s.str(order); }

Json vector_json(const Vector& v, int order) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(s.str(order));
  return a;
}

Json matrix_json(const ExactMatrix& m, int order) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) vector_json(m.row(r), order).swap(rows.emplace_back());
  return rows;
}

Json tensor_json(const Tensor& t, int order) {
  Json a = Json::array();
  t.for_each_nonzero([&](const Index& idx, const Scalar& c) {
    Json e;
    e["index"] = std::vector<int>(idx.begin(), idx.begin() + t.legs());
    e["value"] = c.str(order);
    a.push_back(e);
  });
  return a;
}

Json axioms_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.passed) {
      j["witness"] = c.witness;
      j["detail"] = c.detail;
    }
    checks.push_back(j);
  }
  Json out;
  out["all_passed"] = r.all_passed();
  out["checks"] = checks;
  if (const AxiomCheck* f = r.first_failure()) out["first_failure"] = f->name;
  return out;
}

Json derived_json(const QuasiHopfAlgebra& A) {
  const int m = A.order;
  Json out;
  const DrinfeldTwist tw = drinfeld_twist(A);
  out["f"] = tensor_json(tw.f, m);
  out["f_inv"] = tensor_json(tw.f_inv, m);
  out["gamma"] = tensor_json(tw.gamma, m);
  const DrinfeldElement de = drinfeld_element(A);
  out["u"] = tensor_json(de.u, m);
  out["u_tilde"] = tensor_json(de.u_tilde, m);
  out["u_inv"] = tensor_json(de.u_inv, m);
  out["u_inv_source"] = de.u_inv_from_ribbon ? "inverse of the tilde element under S" : "linear solve";
  out["monodromy"] = tensor_json(monodromy(A), m);
  out["computed_inverses"] = A.computed;
  return out;
}

Json coend_json(const QuasiHopfAlgebra& A, const CoendMaps& maps) {
  const int m = A.order;
  Json out;
  out["mu_hat"] = matrix_json(maps.mu_hat, m);
  out["delta_hat"] = matrix_json(maps.delta_hat, m);
  out["eta_hat"] = vector_json(maps.eta_hat, m);
  out["eps_hat"] = tensor_json(maps.eps_hat, m);
  out["s_hat_L"] = matrix_json(maps.s_hat_L, m);
  out["omega_hat"] = tensor_json(maps.omega_hat, m);
  out["D"] = tensor_json(maps.D, m);
  out["W"] = tensor_json(maps.W, m);
  out["X_Q"] = tensor_json(maps.X_Q, m);
  out["X_D"] = tensor_json(maps.X_D, m);
  return out;
}

Json braided_hopf_json(const BraidedHopfReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (c.skipped) j["skipped"] = true;
    if (!c.passed || c.skipped) j["detail"] = c.detail;
    checks.push_back(j);
  }
  Json out;
  out["all_passed"] = r.all_passed();
  out["checks"] = checks;
  return out;
}

Json factorisability_json(const QuasiHopfAlgebra& A, const FactorisabilityReport& r) {
  const int m = A.order;
  Json out;
  out["dim"] = r.dim;
  out["d_hat_L"] = tensor_json(r.d_hat_L, m);
  out["rank_D"] = r.rank_D;
  out["m_bt"] = tensor_json(r.m_bt, m);
  out["rank_BT"] = r.rank_BT;
  out["invariants_dim"] = r.invariants_dim;
  out["coinvariants_dim"] = r.coinvariants_dim;
  out["omega_iso_rank"] = r.omega_iso_rank;
  out["d_routes_agree"] = r.d_routes_agree;
  out["bt_routes_agree"] = r.bt_routes_agree;
  out["d_test"] = r.d_test;
  out["bt_test"] = r.bt_test;
  out["omega_test"] = r.omega_test;
  out["tests_agree"] = r.tests_agree;
  out["is_factorisable"] = r.is_factorisable;
  return out;
}

Json modular_json(const QuasiHopfAlgebra& A, const ModularData& md, const ReportOptions& opt) {
  const int m = A.order;
  Json out;
  Json cb = Json::array();
  for (const auto& z : md.center_basis) cb.push_back(vector_json(z, m));
  out["center_basis"] = cb;
  out["integral_solution_dim"] = md.integral.dimension();
  if (md.integral.lambda_hat) {
    out["integral"] = vector_json(*md.integral.lambda_hat, m);
    out["pairing_value_k"] = md.integral.k.str(m);
  }
  Json co;
  co["left_dim"] = md.cointegral.left.size();
  co["right_dim"] = md.cointegral.right.size();
  co["two_sided_dim"] = md.cointegral.two_sided.size();
  if (md.cointegral.c) co["c"] = vector_json(*md.cointegral.c, m);
  co["normalised"] = md.cointegral.normalised;
  out["cointegral"] = co;
  if (md.st) {
    out["S_hat"] = matrix_json(md.st->S_hat, m);
    out["T_hat"] = matrix_json(md.st->T_hat, m);
  }
  if (md.sl2z) {
    out["S_Z"] = matrix_json(md.sl2z->S_Z, m);
    out["T_Z"] = matrix_json(md.sl2z->T_Z, m);
  }
  if (md.lambda_hat) {
    out["lambda"] = md.lambda_hat->str(m);
    if (!md.integral.k.is_zero()) out["lambda_squared_over_k"] = (*md.lambda_hat * *md.lambda_hat / md.integral.k).str(m);
    out["lambda_note"] = md.lambda_note;
  }
  if (!opt.projective && md.integral.lambda_hat) {
    out["normalisation_note"] =
        "all matrices use the unnormalised integral; the normalised S-matrices are these divided by a square root "
        "of k, which need not exist in the ground field";
  }
  Json rel = Json::array();
  for (const auto& r : md.relations) {
    Json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    if (!r.passed) j["detail"] = r.detail;
    rel.push_back(j);
  }
  out["relations"] = rel;
  out["all_relations_hold"] = md.all_relations_hold();
  return out;
}

Json fusion_json(const FusionTable& t) {
  Json out;
  out["labels"] = t.labels;
  Json entries = Json::array();
  for (std::size_t u = 0; u < t.N.size(); ++u)
    for (std::size_t v = 0; v < t.N.size(); ++v)
      for (std::size_t w = 0; w < t.N.size(); ++w) {
        if (t.N[u][v][w] == 0) continue;
        Json e;
        e["U"] = t.labels[u];
        e["V"] = t.labels[v];
        e["W"] = t.labels[w];
        e["N"] = t.N[u][v][w];
        entries.push_back(e);
      }
  out["nonzero"] = entries;
  out["N"] = t.N;
  out["oracle_run"] = t.oracle_run;
  if (t.oracle_run) out["matches_oracle"] = t.matches_oracle;
  out["unit_column"] = t.unit_column;
  out["symmetric"] = t.symmetric;
  return out;
}

std::string fusion_csv(const FusionTable& t) {
  std::ostringstream os;
  os << "U,V,W,N\n";
  for (std::size_t u = 0; u < t.N.size(); ++u)
    for (std::size_t v = 0; v < t.N.size(); ++v)
      for (std::size_t w = 0; w < t.N.size(); ++w)
        os << t.labels[u] << ',' << t.labels[v] << ',' << t.labels[w] << ',' << t.N[u][v][w] << '\n';
  return os.str();
}

namespace {

struct Pipeline {
  const AlgebraFile& file;
  const QuasiHopfAlgebra& A;
  ReportOptions opt;
  std::optional<CoendMaps> maps_;
  std::optional<FactorisabilityReport> fact_;
  std::optional<ModularData> md_;

  const CoendMaps& maps() {
    if (!maps_) maps_ = coend_maps(A);
    return *maps_;
  }
  const FactorisabilityReport& fact() {
    if (!fact_) fact_ = factorisability(A, maps());
    return *fact_;
  }
  const ModularData& md() {
    if (!md_) md_ = modular_data(A, maps());
    return *md_;
  }

  Json modular() {
    Json out;
    if (!fact().is_factorisable) {
      out["status"] = "not_factorisable";
      out["integral_solution_dim"] = integral_L(A, maps()).dimension();
      return out;
    }
    if (!A.ribbon) {
      out["status"] = "no_ribbon";
      return out;
    }
    out = modular_json(A, md(), opt);
    out["status"] = "ok";
    return out;
  }

  std::optional<FusionTable> table;
  Json fusion() {
    Json out;
    if (!file.has_flag("char0")) throw UsageError("fusion requires the char0 flag in the definition file");
    if (file.simples.empty()) {
      out["status"] = "no_simples";
      return out;
    }
    if (!fact().is_factorisable) {
      out["status"] = "not_factorisable";
      return out;
    }
    if (!A.ribbon) {
      out["status"] = "no_ribbon";
      return out;
    }
    const SimpleSet S = make_simple_set(A, file.simples);
    out["simples_complete"] = S.complete;
    out["characters_independent"] = S.characters_independent;
    out["radical_dim"] = S.radical_dim;
    table = verlinde_fusion(A, S, opt.oracle);
    out["table"] = fusion_json(*table);

    // chi_V = S_Z(phi_V) and S_Z^2(phi_V) = k phi_{V*}, checked on A.
    const ModularData& m = md();
    Json checks = Json::array();
    if (m.sl2z && m.cointegral.c && m.cointegral.normalised) {
      const ExactMatrix& sz = m.sl2z->S_Z_on_A;
      for (const AModule& V : S.simples) {
        const Vector phi = phi_central(A, V, *m.cointegral.c);
        const Vector chi = chi_central(A, V);
        const Vector phi_dual = phi_central(A, dual_module(A, V), *m.cointegral.c);
        Vector k_phi_dual = phi_dual;
        for (auto& x : k_phi_dual) x *= m.integral.k;
        Json j;
        j["module"] = V.label;
        j["chi_equals_S_Z_phi"] = (sz * phi) == chi;
        j["S_Z_squared_phi_equals_k_phi_dual"] = (sz * (sz * phi)) == k_phi_dual;
        checks.push_back(j);
      }
    }
    out["character_checks"] = checks;
    out["status"] = "ok";
    return out;
  }
};

}  // namespace

FusionTable fusion_table(const AlgebraFile& file, const ReportOptions& opt) {
  Pipeline p{file, file.algebra, opt, {}, {}, {}, {}};
  const Json j = p.fusion();
  if (!p.table) throw UsageError("no fusion table: status " + j.value("status", std::string("unknown")));
  return *p.table;
}

CommandResult run_command(const std::string& command, const AlgebraFile& file, const ReportOptions& opt) {
  static const std::vector<std::string> known = {"check", "derived", "coend", "factorisable",
                                                 "modular", "fusion", "report"};
  if (std::find(known.begin(), known.end(), command) == known.end())
    throw std::invalid_argument("unknown command: " + command);
  const QuasiHopfAlgebra& A = file.algebra;
  CommandResult res;
  Json& doc = res.document;
  doc["schema"] = "qhopf-report/1";
  doc["algebra"] = A.name;
  doc["dim"] = A.dim;
  doc["field_order"] = A.order;
  doc["command"] = command;
  const AxiomReport axioms = validate(A);
  if (command == "check" || !axioms.all_passed()) {
    doc["check"] = axioms_json(axioms);
    res.status = axioms.all_passed() ? 0 : 1;
    return res;
  }
  Pipeline p{file, A, opt, {}, {}, {}, {}};
  if (command == "derived") {
    doc["derived"] = derived_json(A);
  } else if (command == "coend") {
    doc["coend"] = coend_json(A, p.maps());
    doc["braided_hopf"] = braided_hopf_json(verify_braided_hopf(A, p.maps()));
  } else if (command == "factorisable") {
    doc["factorisability"] = factorisability_json(A, p.fact());
  } else if (command == "modular") {
    doc["modular"] = p.modular();
  } else if (command == "fusion") {
    doc["fusion"] = p.fusion();
  } else {
    doc["check"] = axioms_json(axioms);
    doc["derived"] = derived_json(A);
    doc["coend"] = coend_json(A, p.maps());
    doc["braided_hopf"] = braided_hopf_json(verify_braided_hopf(A, p.maps()));
    doc["factorisability"] = factorisability_json(A, p.fact());
    doc["modular"] = p.modular();
    if (file.has_flag("char0")) {
      doc["fusion"] = p.fusion();
    } else {
      doc["fusion"] = Json{{"status", "skipped_without_char0"}};
    }
  }
  return res;
}

namespace {

bool is_scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!is_scalar_list(e)) return false;
  return true;
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& os, const Json& j, const std::string& key, int level) {
  const std::string hashes(static_cast<std::size_t>(std::min(level, 6)), '#');
  if (j.is_object()) {
    os << hashes << ' ' << key << "\n\n";
    bool any_scalar = false;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object() || (it->is_array() && !is_scalar_list(*it))) continue;
      os << "- **" << it.key() << "**: ";
      if (it->is_array()) {
        std::string sep;
        os << '[';
        for (const auto& e : *it) {
          os << sep << cell(e);
          sep = ", ";
        }
        os << ']';
      } else {
        os << cell(*it);
      }
      os << '\n';
      any_scalar = true;
    }
    if (any_scalar) os << '\n';
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it->is_object() || (it->is_array() && !is_scalar_list(*it))) render(os, *it, it.key(), level + 1);
    return;
  }
  if (is_matrix(j)) {
    os << hashes << ' ' << key << "\n\n";
    const std::size_t cols = j.front().size();
    os << '|';
    for (std::size_t c = 0; c < cols; ++c) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t c = 0; c < cols; ++c) os << "---|";
    os << '\n';
    for (const auto& row : j) {
      os << '|';
      for (const auto& e : row) os << ' ' << cell(e) << " |";
      os << '\n';
    }
    os << '\n';
    return;
  }
  os << hashes << ' ' << key << "\n\n";
  for (const auto& e : j) {
    if (e.is_object()) {
      std::string sep;
      os << "- ";
      for (auto it = e.begin(); it != e.end(); ++it) {
        os << sep << it.key() << ": " << cell(*it);
        sep = "; ";
      }
      os << '\n';
    } else {
      os << "- " << cell(e) << '\n';
    }
  }
  os << '\n';
}

}  // namespace

std::string to_markdown(const Json& doc, const std::string& title) {
  std::ostringstream os;
  render(os, doc, title, 1);
  return os.str();
}

}  // namespace qhopf
