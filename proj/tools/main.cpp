#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "majorana/suites.h"

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford-algebra toolkit for massless bispinors, two-qubit gates and Majorana braiding"};
  app.require_subcommand(1);

  cli::GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for randomized direction sampling")->capture_default_str();
  app.add_option("--samples", global.samples, "Number of random directions per sampled check")->capture_default_str();
  app.add_flag("--json", global.json, "Emit JSON (tables)");
  app.add_flag("--exact", global.exact, "Exact backend only (canonical frame)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites; JSON report on stdout, summary on stderr");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(std::vector<std::string>(majorana::suites::kSuiteNames.begin(),
                                                     majorana::suites::kSuiteNames.end())))
      ->capture_default_str();

  bool csv = false;
  auto* tables = app.add_subcommand("tables", "Reproduce the Weyl label table and both gate tables");
  tables->add_flag("--csv", csv, "Emit CSV instead of aligned text");

  cli::BispinorOptions bis;
  auto* bispinor = app.add_subcommand("bispinor", "Print a Weyl or Majorana bispinor and its measured labels");
  bispinor->add_option("--type", bis.type)->check(CLI::IsMember({"weyl", "majorana"}))->capture_default_str();
  bispinor->add_option("--index", bis.index)->check(CLI::Range(1, 4))->capture_default_str();
  bispinor->add_option("--theta", bis.theta, "Polar angle in [0, pi]")->capture_default_str();
  bispinor->add_option("--phi", bis.phi, "Azimuth")->capture_default_str();
  bispinor->add_option("--energy", bis.energy, "Also print the sqrt(2E)-rescaled components");

  cli::BraidOptions br;
  auto* braid = app.add_subcommand(
      "braid",
      "Apply a braid word to a fusion basis state. Words are comma separated (B12,B23^-1,...); "
      "the first generator listed acts first.");
  braid->add_option("--word", br.word, "Braid word; empty or omitted is the identity");
  braid->add_option("--init", br.init, "Initial occupation 00, 10, 01 or 11")->capture_default_str();
  braid->add_option("--inverse", br.inverse, "Invert the k-th step (1-based, repeatable)");

  for (auto* sub : {verify, tables, bispinor, braid}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  try {
    if (*verify) return cli::cmd_verify(global, suite, std::cout, std::cerr);
    if (*tables) return cli::cmd_tables(global, csv, std::cout);
    if (*bispinor) return cli::cmd_bispinor(global, bis, std::cout);
    return cli::cmd_braid(global, br, std::cout);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
}
