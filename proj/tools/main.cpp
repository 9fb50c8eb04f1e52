#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "bqha_harness/commands.hpp"

namespace fs = std::filesystem;
using namespace bqha::harness;

int main(int argc, char** argv) {
  CLI::App app{"Quantum harmonic analysis on the Bergman space of the ball"};
  app.require_subcommand(1);

  const std::map<std::string, std::function<RunReport(const Config&, const fs::path&)>> commands{
      {"verify", cmd_verify},         {"convergence", cmd_convergence}, {"criterion", cmd_criterion},
      {"wiener", cmd_wiener},         {"tabulate", cmd_tabulate}};
  const std::map<std::string, std::string> help{
      {"verify", "run the identity and bound suite"},
      {"convergence", "tabulate ||T_{B~_alpha(S)} - S|| over the alpha grid"},
      {"criterion", "tabulate max |B~_alpha(S)| over the alpha grid"},
      {"wiener", "recover polynomial symbols from level sequences"},
      {"tabulate", "dump moment, Phi_alpha level and phi_alpha profile tables"}};

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", config_path, "JSON experiment config")->required();
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Config cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (out_dir) cfg.out = *out_dir;
  if (seed) cfg.seed = *seed;

  try {
    const fs::path out = cfg.out;
    fs::create_directories(out);
    const RunReport rep = commands.at(name)(cfg, out);
    rep.write(out / (name + "_report.json"));
    for (const Record& r : rep.records)
      if (!r.pass)
        std::printf("FAIL %s: measured %.6g, target %.6g, tolerance %.3g\n", r.name.c_str(), r.measured, r.target,
                    r.tolerance);
    std::printf("%s: %d pass, %d fail\n", name.c_str(), rep.passed(), rep.failed());
    return rep.failed() == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
