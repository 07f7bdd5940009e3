#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "papm/harness.hpp"
#include "papm/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Chart-based checks for metric manifolds carrying a product "
               "structure"};
  app.set_version_flag("--version", papm::kVersion);
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  std::string fault;
  double tol = -1.0;
  int point = -1;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the structure axioms at every sample point");
  validate->add_option("spec", spec_path, "Chart description file")
      ->required();
  validate->add_option("--tol", tol, "Override the run tolerance");

  CLI::App* classify = app.add_subcommand(
      "classify", "Report class membership at every sample point");
  classify->add_option("spec", spec_path, "Chart description file")
      ->required();
  classify->add_option("--tol", tol, "Override the run tolerance");

  CLI::App* report = app.add_subcommand(
      "report", "Run the full check catalogue and emit a JSON report");
  report->add_option("spec", spec_path, "Chart description file")->required();
  report->add_option("--out", out_path, "Write the report to this file");
  report->add_option("--point", point,
                     "Run a single sample point instead of all of them");
  report->add_option("--tol", tol, "Override the run tolerance");

  CLI::App* selftest = app.add_subcommand(
      "selftest",
      "Run the built-in charts, the independent oracles and fault injection");
  selftest->add_option(
      "--fault", fault,
      "Run the built-in charts with an injected fault: none, flip-q, scale-k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (validate->parsed())
    return papm::cmd_validate(spec_path, tol, std::cout, std::cerr);
  if (classify->parsed())
    return papm::cmd_classify(spec_path, tol, std::cout, std::cerr);
  if (report->parsed())
    return papm::cmd_report(spec_path, out_path, point, tol, std::cout,
                            std::cerr);
  return papm::cmd_selftest(fault, std::cout, std::cerr);
}
