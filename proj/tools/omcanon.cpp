#include "omcanon/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms of oriented matroids in Orlik-Solomon algebras"};
  app.require_subcommand(1);
  omc::CommandOptions opts;
  std::string base;

  auto* info = app.add_subcommand("info", "matroid and algebra summary");
  info->add_option("--input", opts.input, "input JSON file")->required();

  auto* canonical = app.add_subcommand("canonical", "canonical form of a tope");
  canonical->add_option("--input", opts.input, "input JSON file")->required();
  canonical->add_option("--tope", opts.tope, "sign vector such as +,+,-,-")->required();
  canonical->add_flag("--nonreduced", opts.nonreduced, "top-degree form instead of the reduced one");

  auto* basis = app.add_subcommand("basis", "canonical-form basis of a reduced degree");
  basis->add_option("--input", opts.input, "input JSON file")->required();
  basis->add_option("--grade", opts.grade, "reduced degree, default r-1");
  basis->add_option("--seed", opts.seed, "seed for extension retries");
  basis->add_option("--base", base, "element perturbed by the first extension");

  auto* aomoto = app.add_subcommand("aomoto", "Aomoto cohomology in top degree");
  aomoto->add_option("--input", opts.input, "input JSON file")->required();
  aomoto->add_option("--weights", opts.weights, "weights of the elements other than the base")->required();
  aomoto->add_option("--base", base, "distinguished element, default the first one");
  aomoto->add_option("--seed", opts.seed, "seed for extension retries");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--input", opts.input, "input JSON file")->required();
  verify->add_option("--suite", opts.suite, "residues|simplex|triangulation|bases|aomoto|all");
  verify->add_option("--seed", opts.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  if (!base.empty()) opts.base = base;
  return omc::run_command(opts, std::cout, std::cerr);
}
