#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idealgraph/cli.hpp"

using namespace idealgraph;

int main(int argc, char** argv) {
  CLI::App app{"intersection graphs of ideals of finite commutative rings"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string format = "text";
  std::optional<int> oracle_cap_flag;
  bool as_json = false, as_dot = false;
  bool no_timestamp = false;
  SweepConfig sweep_config;
  std::vector<int> vs_flat;

  auto* classify = app.add_subcommand("classify", "run every classification check on one spec");
  classify->add_option("spec", spec_text, "ring spec, e.g. \"Z12\" or \"GF(2) x Z8\"")
      ->required();
  classify->add_option("--format", format, "text or json")->capture_default_str();
  classify->add_option("--oracle-cap", oracle_cap_flag, "hamiltonian oracle vertex cap");

  auto* graph = app.add_subcommand("graph", "print the intersection graph");
  graph->add_option("spec", spec_text)->required();
  graph->add_flag("--json", as_json, "JSON output");
  graph->add_flag("--dot", as_dot, "DOT output (default)");

  auto* hamiltonian = app.add_subcommand("hamiltonian", "construct a Hamiltonian cycle");
  hamiltonian->add_option("spec", spec_text)->required();
  hamiltonian->add_option("--oracle-cap", oracle_cap_flag, "fallback oracle vertex cap");

  auto* pancyclic = app.add_subcommand("pancyclic", "construct cycles of every length 3..V");
  pancyclic->add_option("spec", spec_text)->required();
  pancyclic->add_option("--oracle-cap", oracle_cap_flag, "oracle vertex cap");

  auto* sweep = app.add_subcommand("sweep", "classify every catalog spec within a budget");
  sweep->add_option("--max-vertices", sweep_config.max_vertices)->capture_default_str();
  sweep->add_option("--block-budget", sweep_config.block_budget)->capture_default_str();
  sweep->add_option("--q-values", sweep_config.q_values, "allowed field sizes")
      ->capture_default_str();
  sweep->add_option("--chain-k-max", sweep_config.chain_k_max)->capture_default_str();
  sweep->add_option("--vs-params", vs_flat, "vs blocks as flat q d pairs, e.g. 2 2 3 2");
  sweep->add_option("--jobs,-j", sweep_config.parallel, "worker count (0 = auto)")
      ->capture_default_str();
  sweep->add_option("--format", format, "text or json")->capture_default_str();
  sweep->add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");
  sweep->add_option("--oracle-cap", oracle_cap_flag, "hamiltonian oracle vertex cap");

  CLI11_PARSE(app, argc, argv);

  int cap = cli::resolve_oracle_cap(oracle_cap_flag);
  if (classify->parsed())
    return cli::cmd_classify(spec_text, format, cap, std::cout, std::cerr);
  if (graph->parsed()) {
    if (as_json && as_dot) {
      std::cerr << "error: choose one of --dot / --json\n";
      return cli::kExitUsage;
    }
    return cli::cmd_graph(spec_text, as_json, std::cout, std::cerr);
  }
  if (hamiltonian->parsed()) return cli::cmd_hamiltonian(spec_text, cap, std::cout, std::cerr);
  if (pancyclic->parsed()) return cli::cmd_pancyclic(spec_text, cap, std::cout, std::cerr);
  if (sweep->parsed()) {
    if (!vs_flat.empty()) {
      if (vs_flat.size() % 2 != 0) {
        std::cerr << "error: --vs-params needs q d pairs\n";
        return cli::kExitUsage;
      }
      sweep_config.vs_params.clear();
      for (std::size_t i = 0; i < vs_flat.size(); i += 2)
        sweep_config.vs_params.emplace_back(vs_flat[i], vs_flat[i + 1]);
    }
    sweep_config.hamiltonian_oracle_cap = cap;
    return cli::cmd_sweep(sweep_config, format, !no_timestamp, std::cout, std::cerr);
  }
  return cli::kExitUsage;
}
