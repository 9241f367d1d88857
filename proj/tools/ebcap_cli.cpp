#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "ebcap/commands.hpp"
#include "ebcap/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ebcap: capacity regions of entanglement-breaking channels "
               "under unreliable entanglement assistance"};
  app.set_version_flag("--version", std::string(ebcap::kVersion));
  app.require_subcommand(1);

  double eps = 0.7;
  int grid = 512;
  std::string out;
  std::string channel_file;
  std::string config_file;
  std::string out_dir;
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 100;

  CLI::App* depol = app.add_subcommand(
      "depol-region", "Closed-form depolarizing frontier as CSV");
  depol->add_option("--eps", eps, "depolarization parameter")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  depol->add_option("--grid", grid, "alpha grid size")->default_val(512);
  depol->add_option("--out", out, "output CSV path")->required();

  CLI::App* td = app.add_subcommand(
      "td-region", "Time-division baseline frontier as CSV");
  td->add_option("--eps", eps, "depolarization parameter")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  td->add_option("--grid", grid, "lambda grid size")->default_val(512);
  td->add_option("--out", out, "output CSV path")->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Frontier sweep over encoding ensembles for a channel file");
  sweep->add_option("--channel", channel_file, "channel JSON file")->required();
  sweep->add_option("--config", config_file, "sweep config JSON file")
      ->required();
  sweep->add_option("--out", out, "output CSV path")->required();

  CLI::App* check = app.add_subcommand(
      "check-eb", "Certify entanglement breaking via the Choi PPT test");
  check->add_option("--channel", channel_file, "channel JSON file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the executable property suites");
  verify->add_option("--suite", suite, "one of: lemmas, depol, all")
      ->default_val("all")
      ->check(CLI::IsMember({"lemmas", "depol", "all"}));
  verify->add_option("--seed", seed, "random seed")->default_val(1);
  verify->add_option("--trials", trials, "trials per property")
      ->default_val(100)
      ->check(CLI::PositiveNumber);

  CLI::App* report = app.add_subcommand(
      "report", "Combined superposition-vs-time-division report");
  report->add_option("--eps", eps, "depolarization parameter")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  report->add_option("--out-dir", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ebcap::kExitOk : ebcap::kExitBadInput;
  }

  if (depol->parsed()) return ebcap::cmd_depol_region(eps, grid, out);
  if (td->parsed()) return ebcap::cmd_td_region(eps, grid, out);
  if (sweep->parsed()) return ebcap::cmd_sweep(channel_file, config_file, out);
  if (check->parsed()) return ebcap::cmd_check_eb(channel_file);
  if (verify->parsed()) return ebcap::cmd_verify(suite, seed, trials);
  if (report->parsed()) return ebcap::cmd_report(eps, out_dir);
  return ebcap::kExitBadInput;
}
