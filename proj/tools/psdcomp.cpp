#include <CLI11.hpp>
#include <iostream>

#include "psdcomp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"psdcomp: positive semidefinite completion of partial Hermitian matrices over "
               "chordal specification patterns"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* check = app.add_subcommand("check", "Chordality check: maximal cliques and clique tree");
  check->add_option("input", input, "partial matrix file")->required();

  psdcomp::cli::CompleteOptions complete_opts;
  double tol_value = 0.0;
  auto* complete = app.add_subcommand("complete", "Complete a partial matrix to a PSD matrix");
  complete->add_option("input", complete_opts.input, "partial matrix file")->required();
  complete->add_option("-o,--output", complete_opts.output, "completed matrix file")->required();
  auto* tol_opt = complete->add_option("--tol", tol_value, "rank/PSD relative tolerance");
  complete->add_flag("--verify", complete_opts.verify,
                     "run the determinant-maximality perturbation check");
  complete->add_option("--report", complete_opts.report_path, "write the report to this file");

  auto* gendet = app.add_subcommand("gendet", "Generalized determinant and rank");
  gendet->add_option("input", input, "fully specified matrix file")->required();

  psdcomp::cli::PinvOptions pinv_opts;
  std::string method = "eig";
  std::size_t split = 0;
  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
  pinv->add_option("input", pinv_opts.input, "fully specified matrix file")->required();
  pinv->add_option("-o,--output", pinv_opts.output, "pseudoinverse output file")->required();
  pinv->add_option("--method", method, "eig or banachiewicz")
      ->check(CLI::IsMember({"eig", "banachiewicz"}));
  auto* split_opt = pinv->add_option("--split", split, "leading block size for banachiewicz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return psdcomp::cli::kExitParse;
  }

  if (check->parsed()) return psdcomp::cli::cmd_check(input, std::cout, std::cerr);
  if (complete->parsed()) {
    if (!tol_opt->empty()) complete_opts.tol = tol_value;
    return psdcomp::cli::cmd_complete(complete_opts, std::cout, std::cerr);
  }
  if (gendet->parsed()) return psdcomp::cli::cmd_gendet(input, std::cout, std::cerr);
  if (pinv->parsed()) {
    pinv_opts.method = method == "banachiewicz" ? psdcomp::cli::PinvMethod::Banachiewicz
                                                : psdcomp::cli::PinvMethod::Eig;
    if (!split_opt->empty()) pinv_opts.split = split;
    return psdcomp::cli::cmd_pinv(pinv_opts, std::cout, std::cerr);
  }
  return psdcomp::cli::kExitParse;
}
