#include <CLI11.hpp>
#include <algorithm>
#include <iostream>

#include "cli.hpp"

using namespace gcrys::cli;

int main(int argc, char** argv) {
  CLI::App app{"gcrys: geometric crystals, tropical crystals, Toda operators and Whittaker integrals"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  RunConfig cfg;
  std::string config_path;
  double truncation = 0, tol = 0;

  app.add_option("--config", config_path, "flat key=value file; flags override its values");
  app.add_option("--rank", cfg.rank, "n, for GL_{n+1}");
  app.add_option("--word", cfg.word, "reduced word, e.g. 3,2,1,3,2,3");
  app.add_option("--weight", cfg.weight, "dominant weight T, e.g. 2,1,0");
  app.add_option("--mu", cfg.mu, "spectral parameter mu");
  app.add_option("--t", cfg.t, "highest weight t (positive reals)");
  app.add_option("--lambda", cfg.lambda, "lambda for cauchy/pieri");
  app.add_option("--nu", cfg.nu, "nu for cauchy");
  app.add_option("--s", cfg.s, "s for cauchy");
  app.add_option("--gamma", cfg.gamma, "gamma for pieri");
  app.add_option("--y", cfg.y, "y for pieri");
  app.add_option("--points-per-dim", cfg.points_per_dim, "quadrature nodes per dimension");
  auto* trunc_opt = app.add_option("--truncation", truncation, "fixed half-width of the box in log coordinates");
  auto* tol_opt = app.add_option("--tol", tol, "pass/fail tolerance");
  app.add_option("--format", cfg.format, "json, csv, dot or text")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--out", cfg.out, "output file (crystal: path prefix)");
  app.add_option("--seed", cfg.seed, "seed for randomized probes");
  app.add_option("--starts", cfg.starts, "starting points for the uniqueness probe");

  auto* verify = app.add_subcommand("verify", "exact identity suites")->fallthrough();
  verify->add_option("target", cfg.target, "braid | axioms | jacobians | toda-commute | twist-roundtrip")->required();
  auto* crystal = app.add_subcommand("crystal", "combinatorial crystal of a dominant weight")->fallthrough();
  auto* whittaker = app.add_subcommand("whittaker", "Whittaker function numerics")->fallthrough();
  whittaker->add_option("operation", cfg.target, "eval | eigen | cauchy | pieri | critical")
      ->required()
      ->check(CLI::IsMember({"eval", "eigen", "cauchy", "pieri", "critical"}));

  // config values go in front so that explicit flags take precedence
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) config_path = argv[i + 1];
    if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
  }
  try {
    if (!config_path.empty()) args = config_tokens(read_config(config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (trunc_opt->count()) cfg.truncation = truncation;
  if (tol_opt->count()) cfg.tol = tol;

  try {
    if (*verify) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    if (*crystal) {
      cfg.command = "crystal";
      return cmd_crystal(cfg);
    }
    cfg.command = "whittaker";
    return cmd_whittaker(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
