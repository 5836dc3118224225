// satake: command-line front end. Options are shared across subcommands so a
// flat key=value --config file can set any of them.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "satake/cli.hpp"

int main(int argc, char** argv)
{
  using satake::cli::Command;
  using satake::cli::Format;

  CLI::App app{"Numerical verification of Satake-parameter bounds and the exponent-halving bootstrap"};
  app.set_config("--config", "", "key=value file supplying any option below");
  app.require_subcommand(1);

  satake::cli::RunConfig cfg;
  std::optional<int> n;
  std::optional<std::int64_t> trials;
  std::string format = "json";
  bool no_tail = false;
  double tail = 1.0;

  app.add_option("--seed", cfg.seed, "random seed")->envname("SATAKE_SEED");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--n", n, "rank");
  app.add_option("--trials", trials, "number of random trials");
  app.add_option("--r", cfg.r, "degree of the coefficient");
  app.add_option("--eps", cfg.eps, "target exponent");
  app.add_option("--xmax", cfg.xmax, "largest X for partial sums");
  app.add_option("--max-modulus", cfg.max_modulus, "largest sampled |alpha|");
  app.add_option("--start-j", cfg.start_j, "first index in the trace bound sum (1 or 2)");
  app.add_flag("--exact", cfg.exact, "exact rational arithmetic");
  app.add_option("--replay", cfg.replay, "re-check a serialized counterexample");
  app.add_option("--series", cfg.series, "prime:value pairs, e.g. 2:2,3:1.5");
  app.add_option("--p-max", cfg.p_max, "largest prime with an explicit coefficient");
  app.add_option("--default", cfg.default_value, "coefficient at primes <= p-max not listed");
  app.add_option("--tail", tail, "coefficient at primes > p-max");
  app.add_flag("--no-tail", no_tail, "leave primes > p-max undefined");
  app.add_option("--iters", cfg.iters, "'auto' or an iteration count");
  app.add_option("--conductor", cfg.conductor, "conductor C");
  app.add_option("--A", cfg.A, "initial conductor exponent (measured when absent)");
  app.add_option("--abscissa", cfg.abscissa, "growth abscissa (regressed when absent)");
  app.add_option("--np", cfg.prime_norm, "prime norm for lrs");
  app.add_option("--values", cfg.values, "explicit parameters: re or re:im, comma separated");
  app.add_flag("--timing", cfg.timing, "include runtimes in the report");

  const std::map<std::string, Command> commands{
      {"constants", Command::constants}, {"verify-bound", Command::verify_bound},
      {"cauchy", Command::cauchy},       {"bootstrap", Command::bootstrap},
      {"lrs", Command::lrs},             {"sample", Command::sample},
      {"report", Command::report}};
  const std::map<std::string, std::string> blurbs{
      {"constants", "exact threshold sequence and leading constant"},
      {"verify-bound", "random campaign for the trace majorization"},
      {"cauchy", "Schur-sum against Euler-coefficient identity"},
      {"bootstrap", "iterated exponent-halving on a multiplicative series"},
      {"lrs", "check |alpha| against the Luo-Rudnick-Sarnak threshold"},
      {"sample", "draw one unitary parameter class"},
      {"report", "run the acceptance matrix"}};
  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, blurbs.at(name));
    sub->fallthrough();
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.format = format == "csv" ? Format::csv : Format::json;
  cfg.tail_value = no_tail ? std::nullopt : std::optional<double>(tail);
  if (n)
    cfg.n = *n;
  else if (cfg.command == Command::cauchy)
    cfg.n = 3;
  if (cfg.command == Command::report)
    cfg.report_trials = trials;
  else if (trials)
    cfg.trials = *trials;

  const auto result = satake::cli::run(cfg);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.document;
  return result.exit_code;
}
