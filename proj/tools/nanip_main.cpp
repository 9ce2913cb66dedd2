#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nanip/commands.hpp"

namespace {

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nanip::cli;
  CLI::App app{"Neighbor-aided network installation: exact, heuristic, and bound solvers"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find an installation sequence and report its cost");
  solve_cmd->add_option("--graph", solve.graph_path, "Edge-list file")->required();
  solve_cmd->add_option("--cost", solve.cost_spec, "Cost spec")->capture_default_str();
  solve_cmd->add_option("--alg", solve.algorithm, "dp | brute | greedy | degree | random")->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "RNG seed")->capture_default_str();
  solve_cmd->add_flag("--json", "JSON output (always on)");

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bounds and the greedy upper bound");
  bound_cmd->add_option("--graph", bound.graph_path, "Edge-list file")->required();
  bound_cmd->add_option("--cost", bound.cost_spec, "Cost spec")->capture_default_str();
  bound_cmd->add_flag("--json", "JSON output (always on)");

  BenchOptions bench;
  std::string m_list;
  auto* bench_cmd = app.add_subcommand("bench-fig3", "Greedy versus optimum on random connected graphs");
  bench_cmd->add_option("--n", bench.n, "Node count")->capture_default_str();
  bench_cmd->add_option("--m", m_list, "Comma-separated edge counts (default 14..105 step 7)");
  bench_cmd->add_option("--instances", bench.instances, "Graphs per edge count")->capture_default_str();
  bench_cmd->add_option("--runs", bench.runs, "Greedy runs per graph")->capture_default_str();
  bench_cmd->add_option("--cost", bench.cost_spec, "Cost spec")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  bench_cmd->add_option("--out", bench.out_path, "CSV output path (default stdout)");
  bench_cmd->add_flag("--json", bench.json, "Print the summary as JSON");

  ExpectedCostOptions expected;
  auto* expected_cmd = app.add_subcommand("expected-cost", "Expected cost of a random order on G(n, p)");
  expected_cmd->add_option("--n", expected.n, "Node count")->required();
  expected_cmd->add_option("--p", expected.p, "Edge probability")->required();
  expected_cmd->add_option("--cost", expected.cost_spec, "Cost spec")->capture_default_str();
  expected_cmd->add_option("--trials", expected.trials, "Monte Carlo trials (0 = skip)")->capture_default_str();
  expected_cmd->add_option("--seed", expected.seed, "RNG seed")->capture_default_str();
  expected_cmd->add_flag("--json", "JSON output (always on)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph as an edge list");
  gen_cmd->add_option("kind", gen.kind, "tree | connected | gnp")->required();
  gen_cmd->add_option("--n", gen.n, "Node count")->required();
  gen_cmd->add_option("--m", gen.m, "Edge count (connected)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out_path, "Output path (default stdout)");

  ExportIpOptions ip;
  auto* ip_cmd = app.add_subcommand("export-ip", "Write the integer program in LP format");
  ip_cmd->add_option("--graph", ip.graph_path, "Edge-list file")->required();
  ip_cmd->add_option("--cost", ip.cost_spec, "Cost spec")->capture_default_str();
  ip_cmd->add_option("--out", ip.out_path, "LP output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  CommandOutput result;
  if (*solve_cmd) {
    result = cmd_solve(solve);
  } else if (*bound_cmd) {
    result = cmd_bound(bound);
  } else if (*bench_cmd) {
    try {
      bench.edge_counts = parse_list(m_list);
    } catch (const std::exception&) {
      std::cerr << "error: invalid --m list '" << m_list << "'\n";
      return kExitInput;
    }
    bench.threads = threads_from_env();
    result = cmd_bench_fig3(bench);
  } else if (*expected_cmd) {
    result = cmd_expected_cost(expected);
  } else if (*gen_cmd) {
    result = cmd_gen(gen);
  } else if (*ip_cmd) {
    result = cmd_export_ip(ip);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
