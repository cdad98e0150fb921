#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

using minlen::cli::RunConfig;

struct RawOptions {
  std::vector<std::string> delta_x_min;
  std::vector<std::string> eta;
};

void add_common(CLI::App& sub, RunConfig& config, RawOptions& raw) {
  sub.add_option("--delta-x-min", raw.delta_x_min, "Minimal length in meters (default 1e-16)")->delimiter(',');
  sub.add_flag("--atomic-units", config.atomic_units, "Interpret --delta-x-min in Bohr radii");
  sub.add_option("--eta", raw.eta, "Deformation ratio beta/(beta+beta') in [1/3, 1]; fractions like 1/3 accepted")
      ->delimiter(',');
  sub.add_option("--n", config.n, "Principal quantum number(s)")->delimiter(',');
  sub.add_option("--l", config.l, "Orbital quantum number")->capture_default_str();
  sub.add_option("--m", config.m, "Magnetic quantum number")->capture_default_str();
  sub.add_option("--n-max", config.n_max, "Truncation of the wave-function correction sum")->capture_default_str();
  sub.add_option("--samples", config.samples, "Number of eta samples (figure1)")->capture_default_str();
  sub.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub.add_option("--out", config.out, "Output file (default stdout)");
  sub.add_option("--epsilon-bohr", config.epsilon_bohr, "Relative error of the measured Bohr magneton")
      ->capture_default_str();
  sub.add_option("--grid-nodes", config.grid_nodes, "Radial quadrature nodes (default MINLEN_GRID_NODES or 200)");
  sub.add_flag("--no-header-timestamp", [&config](std::int64_t) { config.header_timestamp = false; },
               "Omit the generation timestamp so output is byte-identical across runs");
}

bool resolve(const RawOptions& raw, RunConfig& config) {
  try {
    if (!raw.delta_x_min.empty()) {
      config.delta_x_min.clear();
      for (const auto& s : raw.delta_x_min) config.delta_x_min.push_back(minlen::cli::parse_number(s));
    }
    if (!raw.eta.empty()) {
      config.eta.clear();
      for (const auto& s : raw.eta) config.eta.push_back(minlen::cli::parse_number(s));
    }
  } catch (const std::exception& e) {
    std::cerr << "minlen: cannot parse number: " << e.what() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbital magnetic moment of hydrogen in deformed space with minimal length"};
  app.require_subcommand(1);

  using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"varsigma", {"Relative moment correction for (delta-x-min, eta, n)", minlen::cli::cmd_varsigma}},
      {"figure1", {"Correction as a function of eta for several n (CSV/JSON)", minlen::cli::cmd_figure1}},
      {"flux-check", {"Current-tube quadrature against the closed form", minlen::cli::cmd_flux_check}},
      {"compare", {"Deformation vs weak-relativistic correction and precision verdict", minlen::cli::cmd_compare}},
      {"matrix", {"Perturbation matrix elements and wave-function coefficients", minlen::cli::cmd_matrix}},
  };

  RunConfig config;
  RawOptions raw;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    add_common(*sub, config, raw);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return minlen::cli::kExitValidation;
  }
  if (!resolve(raw, config)) return minlen::cli::kExitValidation;

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    const auto& command = commands.at(name).second;
    return command(config, std::cout, std::cerr);
  }
  return minlen::cli::kExitValidation;
}
