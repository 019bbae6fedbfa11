// chlab: experiment driver for the Littlewood-Paley / Besov laboratory and
// the Camassa-Holm family solver.  Subcommands run one suite each and print
// one [PASS]/[FAIL] line per check; the exit code is 0 iff the suite passed.
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "chlab/experiment.hpp"

namespace {

void add_common_options(CLI::App* sub, chlab::SuiteConfig& cfg) {
  sub->add_option("--s", cfg.s, "Besov regularity s");
  sub->add_option("--p", cfg.p, "Lebesgue exponent p");
  sub->add_option("--r", cfg.r, "summation exponent r");
  sub->add_option("--alpha", cfg.alpha, "Hoelder exponent in (0,1)");
  sub->add_option("--n-min", cfg.n_min, "lowest dyadic mode");
  sub->add_option("--n-max", cfg.n_max, "highest dyadic mode (0 = per-suite default)");
  sub->add_option("--model", cfg.model, "ch | bfamily:<b> | novikov");
  sub->add_option("--grid-L", cfg.grid_L, "box scale L (box is [-pi L, pi L))");
  sub->add_option("--grid-N", cfg.grid_N, "lattice points (0 = per-suite default)");
  sub->add_option("--out", cfg.out_dir, "directory for report files");
  sub->add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", cfg.seed, "RNG seed for sampled checks");
  sub->add_flag("--plot", cfg.plot, "emit a plot script alongside the data");
  sub->add_option("--scaling-case", cfg.scaling_case,
                  "scaling suite regime: high (Case 1) | low (Case 2)");
  sub->add_option("--t-lo", cfg.t_lo, "scaling suite smallest time");
  sub->add_option("--t-hi", cfg.t_hi, "scaling suite largest time");
  sub->add_option("--points-per-decade", cfg.points_per_decade,
                  "scaling suite sampling density");
  sub->add_option("--dt-safety", cfg.dt_safety, "CFL safety factor in (0,1]");
  sub->set_config("--config", "", "flat key=value config file; flags override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for Besov norms, dyadic decompositions, "
               "and Camassa-Holm-type flows"};
  app.require_subcommand(1);

  chlab::SuiteConfig cfg;
  std::function<chlab::RunReport(const chlab::SuiteConfig&)> runner;

  struct Entry {
    const char* name;
    const char* help;
    chlab::RunReport (*fn)(const chlab::SuiteConfig&);
  };
  const Entry entries[] = {
      {"cutoffs", "partition of unity, block support, localization, Bony identity",
       chlab::run_cutoff_suite},
      {"lemma31", "series norm bound and lower-bound ratios", chlab::run_lemma31},
      {"scaling", "time-scaling exponents of the flow error terms",
       chlab::run_error_scaling},
      {"holder", "quotient sweep along the shrinking time schedule",
       chlab::run_holder_sweep},
      {"invariants", "solver order/conservation gates and inequality ratio suites",
       chlab::run_invariants_suite},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common_options(sub, cfg);
    sub->callback([&runner, fn = e.fn] { runner = fn; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    chlab::RunReport rep = runner(cfg);
    chlab::emit_report(rep, cfg);
    return rep.pass ? 0 : 1;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
}
