#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "loopdual/cli.hpp"

using namespace loopdual;

namespace {

void add_common(CLI::App* app, RunConfig& cfg) {
  auto* preset = app->add_option("--preset", cfg.preset, "Preset datum name (e.g. SL2, G2, PSO10)");
  app->add_option("--datum-file", cfg.datum_file, "JSON root datum document")->excludes(preset);
  app->add_option("--ring", cfg.rings, "Q or F<p>; repeat or comma-separate for several")->delimiter(',');
  app->add_option("--truncate", cfg.truncation, "Series truncation degree")->check(CLI::PositiveNumber);
  app->add_option("--budget", cfg.budget, "Groebner S-pair budget");
  app->add_option("--out", cfg.out, "Write the structured output here");
  app->add_option("--cache", cfg.cache_dir, "Result cache directory");
  app->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizer presentations and loop-space series for reductive root data"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  std::string check;
  app.add_option("--check", check, "'all' runs the full check suite")->check(CLI::IsMember({"all"}));
  add_common(&app, cfg);
  app.add_flag("--inject-sign-error", cfg.inject_sign_error, "Flip one structure constant (negative control)");
  app.add_option("--max-rank", cfg.max_rank, "check-all: largest preset rank");

  auto* info = app.add_subcommand("datum-info", "Roots, ell_G, exponents, pi_0, n_G and e");
  add_common(info, cfg);
  auto* cent = app.add_subcommand("centralizer", "Presentation of O(B_e) and its verdict against the oracle");
  add_common(cent, cfg);
  auto* all = app.add_subcommand("check-all", "Every invariant suite over the presets");
  add_common(all, cfg);
  all->add_flag("--inject-sign-error", cfg.inject_sign_error, "Flip one structure constant (negative control)");
  all->add_option("--max-rank", cfg.max_rank, "Largest preset rank");

  CLI11_PARSE(app, argc, argv);

  if (*info) return run_guarded(cmd_datum_info, cfg, std::cout, std::cerr);
  if (*cent) return run_guarded(cmd_centralizer, cfg, std::cout, std::cerr);
  if (*all || check == "all") return run_guarded(cmd_check_all, cfg, std::cout, std::cerr);
  std::cerr << app.help();
  return kExitBadInput;
}
