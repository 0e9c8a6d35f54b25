// Command-line front end: qhopf <command> <file> [options].
// Exit status: 0 success, 1 axiom failure, 2 I/O, parse or usage error,
// 3 unexpected internal error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qhopf/format.hpp"
#include "qhopf/parallel.hpp"
#include "qhopf/presets.hpp"
#include "qhopf/report.hpp"

namespace {

qhopf::AlgebraFile load(const std::string& source, bool is_preset, std::optional<int> order) {
  if (is_preset) return qhopf::preset(source, order);
  std::ifstream probe(source);
  if (!probe) throw qhopf::UsageError("cannot open " + source);
  return qhopf::parse_algebra_file(source, order);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for ribbon quasi-Hopf algebras"};

  std::string command;
  std::string source;
  std::string output = "json";
  std::string oracle = "on";
  std::string out_path;
  bool is_preset = false;
  bool projective = false;
  bool list_presets = false;
  int threads = 0;
  std::optional<int> field_order;

  app.add_option("command", command, "check | derived | coend | factorisable | modular | fusion | report")
      ->check(CLI::IsMember({"check", "derived", "coend", "factorisable", "modular", "fusion", "report"}));
  app.add_option("file", source, "algebra definition file, or a preset name with --preset");
  app.add_flag("--preset", is_preset, "treat the file argument as a built-in preset name");
  app.add_flag("--list-presets", list_presets, "print the built-in preset names and exit");
  app.add_option("--field-order", field_order, "embed all data into Q(zeta_m) for this m");
  app.add_option("--output", output, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_flag("--projective", projective, "omit notes on square-root normalisation");
  app.add_option("--oracle", oracle, "on | off: character cross-check of fusion rules")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--threads", threads, "worker threads (0 = hardware default)")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--out", out_path, "write the report to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list_presets) {
    for (const auto& n : qhopf::preset_names()) std::cout << n << '\n';
    return 0;
  }
  if (command.empty() || source.empty()) {
    std::cerr << "error: a command and a file (or --preset name) are required\n";
    return 2;
  }
  if (threads > 0) qhopf::set_thread_count(threads);

  try {
    const qhopf::AlgebraFile file = load(source, is_preset, field_order);
    qhopf::ReportOptions opt;
    opt.projective = projective;
    opt.oracle = oracle == "on";

    std::string text;
    int status = 0;
    if (output == "csv") {
      if (command != "fusion") throw qhopf::UsageError("csv output is only available for the fusion command");
      const qhopf::CommandResult r = qhopf::run_command("check", file, opt);
      if (r.status != 0) {
        std::cerr << "error: axiom check failed\n";
        text = r.document.dump(2) + "\n";
        status = r.status;
      } else {
        text = qhopf::fusion_csv(qhopf::fusion_table(file, opt));
      }
    } else {
      const qhopf::CommandResult r = qhopf::run_command(command, file, opt);
      status = r.status;
      text = output == "md" ? qhopf::to_markdown(r.document, command + ": " + file.algebra.name)
                            : r.document.dump(2) + "\n";
      if (status == 1) std::cerr << "error: axiom check failed\n";
    }

    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw qhopf::UsageError("cannot write " + out_path);
      out << text;
    }
    return status;
  } catch (const qhopf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const qhopf::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
