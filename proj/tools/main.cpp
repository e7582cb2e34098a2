#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace graphprod;
  CLI::App app{"graphprod: geodesics, disk diagrams and subgroup diagnostics in graph products"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  cli::CommandOptions options;
  app.add_option("--config", config_path, "YAML config (default: P4 over Z with subgroups H1, H2)");
  app.add_option("--seed", options.seed, "sampling seed (overrides the config)");
  app.add_option("--budget", options.budget, "enumeration cap for the command");
  app.add_option("--horizon", options.horizon, "subgroup word horizon, or orbit power bound");
  app.add_option("--svg", options.svg, "write an SVG rendering here");
  app.add_option("--dot", options.dot, "write a DOT graph here");
  app.add_option("--json", options.json, "write JSON output here");

  const std::vector<std::pair<std::string, std::string>> help{
      {"reduce", "canonical geodesic of WORD and its prism length"},
      {"geodesics", "all geodesic words for WORD"},
      {"star-length", "star length of WORD"},
      {"diagram", "disk diagram for the identity word WORD"},
      {"comb", "comb the diagram for G.W^-1 (W defaults to the geodesic of G)"},
      {"contact-bounds", "contact distance bounds for hyperplanes V1 G1 and V2 G2"},
      {"orbit", "prism and star lengths of the powers of WORD"},
      {"analyze", "subgroup analysis report for SUBGROUP"},
      {"oracle-check", "compare against breadth-first oracles"}};
  std::string chosen;
  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("args", options.args, "positional arguments");
    sub->callback([&chosen, name = name] { chosen = name; });
    if (name == "comb") sub->add_flag("--right", options.right, "comb the ending function instead");
    if (name == "oracle-check") {
      sub->add_option("--radius", options.radius, "prism ball radius")->check(CLI::Range(0, 5));
      sub->add_option("--star-radius", options.star_radius, "star oracle radius")->check(CLI::Range(0, 3));
      sub->add_option("--samples", options.samples, "random identity words to validate");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  ProjectConfig config;
  try {
    config = config_path.empty() ? cli::default_config() : load_config(config_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  for (const auto& w : config.warnings) std::cerr << "warning: " << w << "\n";
  return cli::run_command(config, chosen, options, std::cout, std::cerr);
}
