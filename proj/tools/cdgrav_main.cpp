#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdgrav/limiter.hpp"
#include "cdgrav/run.hpp"

namespace {

cdgrav::Config load_config(const std::string& path,
                           const std::vector<std::string>& sets) {
  cdgrav::Config cfg;
  if (!path.empty()) cfg = cdgrav::Config::from_file(path);
  for (const std::string& kv : sets) cfg.apply_override(kv);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity-preserving well-balanced central DG solver for "
               "the Euler equations with gravity"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir;
  std::vector<std::string> sets;
  bool quiet = false;
  app.add_option("--config", config_path, "configuration file (key = value)");
  app.add_option("--set", sets, "override, e.g. --set mesh.nx=128")
      ->take_all();
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--quiet", quiet, "suppress console output");

  auto* run = app.add_subcommand("run", "advance one configured problem");
  auto* conv =
      app.add_subcommand("convergence", "mesh-refinement error study");
  auto* wb = app.add_subcommand("wb-report",
                                "distance to the projected equilibrium");
  auto* lst = app.add_subcommand("list-problems", "show the problem catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    cdgrav::Config cfg = load_config(config_path, sets);
    if (lst->parsed()) {
      cdgrav::cli_list_problems();
    } else if (run->parsed()) {
      cdgrav::cli_run(cfg, out_dir, quiet);
    } else if (conv->parsed()) {
      cdgrav::cli_convergence(cfg, out_dir, quiet);
    } else if (wb->parsed()) {
      cdgrav::cli_wb_report(cfg, out_dir, quiet);
    }
  } catch (const cdgrav::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const cdgrav::PositivityFault& e) {
    std::cerr << "positivity fault: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
