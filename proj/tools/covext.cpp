#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "covext/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"covext: extending coverings of surface boundaries"};
  app.require_subcommand(1);
  covext::cli::CommandOptions o;

  std::uint64_t budget = 0;
  std::int64_t seed = 0;
  std::string out;
  auto problem_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("problem", o.input_path, "problem file")->required();
    c->add_option("-o,--output", out, "write the witness here");
    c->add_option("--budget", budget, "search budget in elementary steps");
    c->add_option("--seed", seed, "conjugator seed");
    c->add_flag("--no-witness", o.no_witness, "skip witness construction");
    return c;
  };
  problem_cmd("decide", "decide whether the boundary covering extends");
  problem_cmd("witness", "like decide, but fail unless a witness is produced");
  problem_cmd("count", "count boundary tuples with product e");
  problem_cmd("ore", "write the single boundary class as a commutator");
  problem_cmd("regular", "search for a regular extension");

  auto* verify = app.add_subcommand("verify", "re-check a witness file");
  verify->add_option("witness", o.input_path, "witness file")->required();

  auto* strip = app.add_subcommand("build-strip", "glue the strip cover of a punctured torus");
  strip->add_option("--degree", o.degree, "number of squares")->required();
  strip->add_option("--sigma", o.sigma, "horizontal gluing, cycle notation")->required();
  strip->add_option("--tau", o.tau, "vertical gluing, cycle notation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : covext::cli::kInputError;
  }
  auto* sub = app.get_subcommands().front();
  o.command = sub->get_name();
  auto given = [sub](const char* name) {
    const auto* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--output")) o.output_path = out;
  if (given("--budget")) o.budget = budget;
  if (given("--seed")) o.seed = seed;
  return covext::cli::run_command(o, std::cout, std::cerr);
}
