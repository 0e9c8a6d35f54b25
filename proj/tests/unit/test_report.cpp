#include <doctest.h>

#include <algorithm>

#include "qhopf/parallel.hpp"
#include "qhopf/presets.hpp"
#include "qhopf/report.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

TEST_SUITE("report") {
  TEST_CASE("check status follows the axioms") {
    const AlgebraFile f = preset("double_Z2");
    const CommandResult ok = run_command("check", f, {});
    CHECK(ok.status == 0);
    CHECK(ok.document["check"]["all_passed"] == true);

    AlgebraFile bad = f;
    bad.algebra = mutate(f.algebra, nonzero_sites(f.algebra).front(), Scalar(1));
    for (const char* cmd : {"check", "coend", "report"}) {
      const CommandResult r = run_command(cmd, bad, {});
      CHECK(r.status == 1);
      CHECK(r.document["check"]["all_passed"] == false);
      CHECK(r.document["check"].contains("first_failure"));
      CHECK_FALSE(r.document.contains("coend"));
    }
  }

  TEST_CASE("unknown commands are rejected") {
    CHECK_THROWS_AS(run_command("frobnicate", preset("trivial"), {}), std::invalid_argument);
  }

  TEST_CASE("fusion needs the char0 flag") {
    AlgebraFile f = preset("double_Z2");
    f.flags.clear();
    CHECK_THROWS_AS(run_command("fusion", f, {}), UsageError);
    const CommandResult r = run_command("report", f, {});
    CHECK(r.document["fusion"]["status"] == "skipped_without_char0");
  }

  TEST_CASE("statuses for degenerate inputs") {
    const CommandResult m = run_command("modular", preset("group_Z2_trivialR"), {});
    CHECK(m.document["modular"]["status"] == "not_factorisable");
    const CommandResult fu = run_command("fusion", preset("group_Z2_trivialR"), {});
    CHECK(fu.document["fusion"]["status"] == "not_factorisable");
  }

  TEST_CASE("report sections") {
    const CommandResult r = run_command("report", preset("twisted_double_Z2"), {});
    CHECK(r.status == 0);
    for (const char* key : {"check", "derived", "coend", "braided_hopf", "factorisability", "modular", "fusion"})
      CHECK(r.document.contains(key));
    CHECK(r.document["modular"]["status"] == "ok");
    CHECK(r.document["modular"]["all_relations_hold"] == true);
    CHECK(r.document["modular"].contains("normalisation_note"));
    CHECK(r.document["fusion"]["table"]["matches_oracle"] == true);
    for (const auto& c : r.document["fusion"]["character_checks"]) {
      CHECK(c["chi_equals_S_Z_phi"] == true);
      CHECK(c["S_Z_squared_phi_equals_k_phi_dual"] == true);
    }
    ReportOptions projective;
    projective.projective = true;
    const CommandResult p = run_command("modular", preset("twisted_double_Z2"), projective);
    CHECK_FALSE(p.document["modular"].contains("normalisation_note"));
  }

  TEST_CASE("output does not depend on the thread count") {
    const AlgebraFile f = preset("twisted_double_Z2");
    const int saved = thread_count();
    set_thread_count(1);
    const std::string one = run_command("report", f, {}).document.dump(2);
    set_thread_count(4);
    const std::string four = run_command("report", f, {}).document.dump(2);
    set_thread_count(saved);
    CHECK(one == four);
    CHECK(run_command("report", f, {}).document.dump(2) == one);
  }

  TEST_CASE("renderings") {
    const AlgebraFile f = preset("double_Z2");
    const FusionTable t = fusion_table(f, {});
    const std::string csv = fusion_csv(t);
    CHECK(csv.rfind("U,V,W,N\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 64);
    const std::string md = to_markdown(run_command("factorisable", f, {}).document, "double_Z2");
    CHECK(md.rfind("# double_Z2", 0) == 0);
    CHECK(md.find("rank_D") != std::string::npos);
    CHECK_THROWS_AS(fusion_table(preset("group_Z2_trivialR"), {}), UsageError);
  }

  TEST_CASE("scalar and tensor encodings") {
    CHECK(scalar_json(Scalar::zeta(4), 4) == "z");
    CHECK(scalar_json(Scalar(mpq_class(1, 2)), 4) == "1/2");
    const Tensor t = Tensor::basis(2, {1, 0});
    const Json j = tensor_json(t, 1);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["index"] == Json::array({1, 0}));
    CHECK(j[0]["value"] == "1");
  }

  TEST_CASE("parallel loops visit each index once") {
    const int saved = thread_count();
    for (int threads : {1, 3, 8}) {
      set_thread_count(threads);
      std::vector<int> hits(100, 0);
      parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
    set_thread_count(saved);
  }
}
