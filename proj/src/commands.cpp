#include "nanip/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "nanip/bench.hpp"
#include "nanip/bounds.hpp"
#include "nanip/error.hpp"
#include "nanip/exact.hpp"
#include "nanip/generators.hpp"
#include "nanip/heuristics.hpp"
#include "nanip/ip_export.hpp"
#include "nanip/random_analysis.hpp"

namespace nanip::cli {

using nlohmann::json;

namespace {

CommandOutput error_output(int code, const char* kind, const std::string& message) {
  CommandOutput out;
  out.exit_code = code;
  out.out = json{{"schema", kJsonSchema}, {"error", {{"kind", kind}, {"message", message}}}}.dump() + "\n";
  out.err = "error: " + message + "\n";
  return out;
}

CommandOutput guarded(const std::function<CommandOutput()>& body) {
  try {
    return body();
  } catch (const SizeLimitError& e) {
    return error_output(kExitSizeGuard, "size_guard", e.what());
  } catch (const InvariantError& e) {
    return error_output(kExitInvariant, "invariant", e.what());
  } catch (const std::exception& e) {
    return error_output(kExitInput, "input", e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open output file '" + path + "'");
  file << content;
  if (!file) throw InputError("failed writing output file '" + path + "'");
}

json report_json(const CostReport& report) {
  return json{{"r_values", report.r_values}, {"node_costs", report.node_costs}, {"total_cost", report.total}};
}

}  // namespace

unsigned threads_from_env() {
  const char* raw = std::getenv("NANIP_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return 0;
  return static_cast<unsigned>(v);
}

CommandOutput cmd_solve(const SolveOptions& opts) {
  return guarded([&] {
    const Graph g = read_edge_list_file(opts.graph_path);
    const CostFunction f = parse_cost_spec(opts.cost_spec);
    const auto start = std::chrono::steady_clock::now();
    InstallSequence seq;
    if (opts.algorithm == "dp") {
      seq = dp_optimal(g, f).sequence;
    } else if (opts.algorithm == "brute") {
      seq = brute_force_optimal(g, f).sequence;
    } else if (opts.algorithm == "greedy") {
      seq = greedy(g, f, RngSeed{opts.seed}).sequence;
    } else if (opts.algorithm == "degree") {
      seq = degree_descending(g, f).sequence;
    } else if (opts.algorithm == "random") {
      seq = random_sequence(g, f, RngSeed{opts.seed}).sequence;
    } else {
      throw InputError("unknown algorithm '" + opts.algorithm + "' (expected dp, brute, greedy, degree, random)");
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    const CostReport report = sequence_cost(g, f, seq);
    json j = report_json(report);
    j["schema"] = kJsonSchema;
    j["algorithm"] = opts.algorithm;
    j["cost"] = f.describe();
    j["sequence"] = std::vector<NodeId>(seq.order().begin(), seq.order().end());
    j["seed"] = opts.seed;
    j["wall_time_ms"] = elapsed.count();
    return CommandOutput{kExitOk, j.dump() + "\n", {}};
  });
}

CommandOutput cmd_bound(const BoundOptions& opts) {
  return guarded([&] {
    const Graph g = read_edge_list_file(opts.graph_path);
    const CostFunction f = parse_cost_spec(opts.cost_spec);
    require_decreasing_convex(g, f);
    json j{{"schema", kJsonSchema}, {"cost", f.describe()}, {"n", g.num_nodes()}, {"m", g.num_edges()}};
    j["jensen"] = {{"bound", jensen_whole_graph_bound(g, f)}};
    const auto relax = relaxation_bound(g, f);
    j["relaxation"] = {{"bound", relax.bound}, {"s", relax.s},         {"r", relax.r},
                       {"level", relax.level}, {"raised", relax.raised}, {"p_values", relax.p_values}};
    try {
      const auto upper = greedy_upper_bound(g, f);
      j["greedy_upper"] = {{"bound", upper.bound}, {"s", upper.s}, {"q", upper.q}, {"fallback", upper.fallback}};
    } catch (const InputError& e) {
      // Only defined for connected graphs with n >= 3; the lower bounds still stand.
      j["greedy_upper"] = {{"error", e.what()}};
    }
    return CommandOutput{kExitOk, j.dump() + "\n", {}};
  });
}

CommandOutput cmd_bench_fig3(const BenchOptions& opts) {
  return guarded([&] {
    BenchConfig config;
    config.num_nodes = opts.n;
    if (!opts.edge_counts.empty()) config.edge_counts = opts.edge_counts;
    config.instances_per_m = opts.instances;
    config.greedy_runs = opts.runs;
    config.cost = parse_cost_spec(opts.cost_spec);
    config.master_seed = RngSeed{opts.seed};
    config.threads = opts.threads;

    const auto records = run_bench_fig3(config);
    const auto summary = summarize(records);
    std::ostringstream csv;
    write_bench_csv(records, csv);

    CommandOutput out;
    if (opts.out_path.empty()) {
      out.out = csv.str();
    } else {
      write_file(opts.out_path, csv.str());
    }
    std::ostringstream line;
    if (opts.json) {
      line << json{{"schema", kJsonSchema},
                   {"records", summary.records},
                   {"mean_greedy_ratio", summary.mean_greedy_ratio},
                   {"max_greedy_ratio", summary.max_greedy_ratio},
                   {"mean_degree_ratio", summary.mean_degree_ratio},
                   {"within_five_percent", summary.within_five_percent}}
                  .dump()
           << '\n';
    } else {
      char buf[160];
      std::snprintf(buf, sizeof buf, "summary: records=%zu mean_greedy_ratio=%.6f max_greedy_ratio=%.6f %s\n",
                    summary.records, summary.mean_greedy_ratio, summary.max_greedy_ratio,
                    summary.within_five_percent ? "PASS (within 5% of optimum)" : "FAIL (greedy exceeds optimum by more than 5%)");
      line << buf;
    }
    // With the CSV on stdout the summary goes to stderr.
    if (opts.out_path.empty()) {
      out.err = line.str();
    } else {
      out.out = line.str();
    }
    if (!summary.within_five_percent) out.exit_code = kExitInvariant;
    return out;
  });
}

CommandOutput cmd_expected_cost(const ExpectedCostOptions& opts) {
  return guarded([&] {
    const CostFunction f = parse_cost_spec(opts.cost_spec);
    const ErModel model{opts.n, opts.p};
    json j{{"schema", kJsonSchema}, {"n", opts.n}, {"p", opts.p}, {"cost", f.describe()}};
    j["exact"] = expected_cost_exact(model, f);
    try {
      j["upper_bound"] = expected_cost_upper(model, f);
    } catch (const InputError& e) {
      j["upper_bound"] = nullptr;
      j["upper_bound_error"] = e.what();
    }
    if (opts.trials > 0) {
      const auto mc = expected_cost_monte_carlo(model, f, opts.trials, RngSeed{opts.seed});
      j["monte_carlo"] = {{"mean", mc.mean}, {"standard_error", mc.standard_error},
                          {"trials", mc.trials}, {"seed", opts.seed}};
    }
    return CommandOutput{kExitOk, j.dump() + "\n", {}};
  });
}

CommandOutput cmd_gen(const GenOptions& opts) {
  return guarded([&] {
    Graph g;
    const RngSeed seed{opts.seed};
    if (opts.kind == "tree") {
      g = gen_random_tree(opts.n, seed);
    } else if (opts.kind == "connected") {
      g = gen_random_connected(opts.n, opts.m, seed);
    } else if (opts.kind == "gnp") {
      g = gen_gnp(opts.n, opts.p, seed);
    } else {
      throw InputError("unknown graph kind '" + opts.kind + "' (expected tree, connected, gnp)");
    }
    std::ostringstream text;
    write_edge_list(g, text);
    CommandOutput out;
    if (opts.out_path.empty()) {
      out.out = text.str();
    } else {
      write_file(opts.out_path, text.str());
    }
    return out;
  });
}

CommandOutput cmd_export_ip(const ExportIpOptions& opts) {
  return guarded([&] {
    const Graph g = read_edge_list_file(opts.graph_path);
    const CostFunction f = parse_cost_spec(opts.cost_spec);
    const IpModel model = build_ip(g, f);
    std::ostringstream text;
    write_lp(model, text);
    CommandOutput out;
    if (opts.out_path.empty()) {
      out.out = text.str();
    } else {
      write_file(opts.out_path, text.str());
    }
    return out;
  });
}

}  // namespace nanip::cli
