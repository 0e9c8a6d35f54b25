#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include "qhopf/presets.hpp"
#include "qhopf/report.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(QHOPF_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qhopf_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check on a preset succeeds") {
    const Run r = run_cli("check --preset trivial");
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["check"]["all_passed"] == true);
  }

  TEST_CASE("check on a file") {
    const std::string path = temp_file("double.qha", preset_source("double_Z2"));
    CHECK(run_cli("check " + path).status == 0);
  }

  TEST_CASE("a mutated file exits with status 1 and a witness") {
    AlgebraFile f = preset("twisted_double_Z2");
    const auto sites = nonzero_sites(f.algebra);
    f.algebra = mutate(f.algebra, sites.at(sites.size() / 2), Scalar(1));
    const std::string path = temp_file("mutated.qha", serialise(f));
    const Run r = run_cli("check " + path);
    CHECK(r.status == 1);
    const Json j = Json::parse(r.out);
    const std::string first = j["check"]["first_failure"];
    bool located = false;
    for (const auto& c : j["check"]["checks"])
      if (c["name"] == first) located = c.contains("witness") && !c["witness"].empty();
    CHECK(located);
  }

  TEST_CASE("input errors exit with status 2") {
    CHECK(run_cli("check /nonexistent/algebra.qha").status == 2);
    CHECK(run_cli("check " + temp_file("broken.qha", "qha 1\ndim 2\norder 1\n[mult]\n0 0 = 1\n")).status == 2);
    CHECK(run_cli("check --preset no_such_preset").status == 2);
    CHECK(run_cli("frobnicate --preset trivial").status == 2);
    CHECK(run_cli("check --preset trivial --output yaml").status == 2);
    CHECK(run_cli("coend --preset trivial --output csv").status == 2);
    CHECK(run_cli("check --preset twisted_double_Z2 --field-order 6").status == 2);
  }

  TEST_CASE("output formats") {
    const Run csv = run_cli("fusion --preset double_Z2 --output csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("U,V,W,N\n", 0) == 0);
    const Run md = run_cli("factorisable --preset double_Z2 --output md");
    CHECK(md.status == 0);
    CHECK(md.out.find("# ") == 0);
    const Run off = run_cli("fusion --preset double_Z2 --oracle off");
    CHECK(off.status == 0);
    CHECK(Json::parse(off.out)["fusion"]["table"]["oracle_run"] == false);
  }

  TEST_CASE("field order option") {
    const Run r = run_cli("check --preset double_Z2 --field-order 8");
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out)["field_order"] == 8);
  }

  TEST_CASE("listing presets") {
    const Run r = run_cli("--list-presets");
    CHECK(r.status == 0);
    CHECK(r.out == "double_Z2\ngroup_Z2_trivialR\ntrivial\ntwisted_double_Z2\n");
  }

  TEST_CASE("writing to a file") {
    const auto path = (std::filesystem::temp_directory_path() / "qhopf_test_out.json").string();
    CHECK(run_cli("derived --preset double_Z2 -o " + path).status == 0);
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j["command"] == "derived");
  }
}
