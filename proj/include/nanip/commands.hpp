#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Command implementations behind the `nanip` executable. Each returns the
// text destined for stdout/stderr plus the process exit code:
//   0 success, 2 input error, 3 size guard, 4 invariant violation.
namespace nanip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSizeGuard = 3;
inline constexpr int kExitInvariant = 4;

inline constexpr int kJsonSchema = 1;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct SolveOptions {
  std::string graph_path;
  std::string cost_spec = "reciprocal:1";
  std::string algorithm = "dp";  // dp | brute | greedy | degree | random
  std::uint64_t seed = 0;
};

struct BoundOptions {
  std::string graph_path;
  std::string cost_spec = "reciprocal:1";
};

struct BenchOptions {
  std::size_t n = 15;
  std::vector<std::size_t> edge_counts;  // empty: 14..105 step 7
  std::size_t instances = 5;
  std::size_t runs = 10;
  std::string cost_spec = "reciprocal:1";
  std::uint64_t seed = 42;
  std::string out_path;  // empty: CSV on stdout
  unsigned threads = 0;
  bool json = false;     // summary as JSON instead of a text line
};

struct ExpectedCostOptions {
  std::size_t n = 0;
  double p = 0.0;
  std::string cost_spec = "reciprocal:1";
  std::size_t trials = 0;  // 0: skip Monte Carlo
  std::uint64_t seed = 0;
};

struct GenOptions {
  std::string kind;  // tree | connected | gnp
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct ExportIpOptions {
  std::string graph_path;
  std::string cost_spec = "reciprocal:1";
  std::string out_path;
};

CommandOutput cmd_solve(const SolveOptions& opts);
CommandOutput cmd_bound(const BoundOptions& opts);
CommandOutput cmd_bench_fig3(const BenchOptions& opts);
CommandOutput cmd_expected_cost(const ExpectedCostOptions& opts);
CommandOutput cmd_gen(const GenOptions& opts);
CommandOutput cmd_export_ip(const ExportIpOptions& opts);

// NANIP_THREADS, or 0 (auto) when unset or unparsable.
unsigned threads_from_env();

}  // namespace nanip::cli
