#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "nanip/cost_model.hpp"
#include "nanip/rng.hpp"

namespace nanip {

// Greedy-versus-optimum sweep over random connected graphs.
struct BenchConfig {
  std::size_t num_nodes = 15;
  std::vector<std::size_t> edge_counts = default_edge_counts();
  std::size_t instances_per_m = 5;
  std::size_t greedy_runs = 10;
  CostFunction cost = CostFunction::reciprocal(1.0);
  RngSeed master_seed{42};
  unsigned threads = 1;  // 0 = hardware concurrency

  // 14, 21, ..., 105: tree through complete graph for n = 15.
  static std::vector<std::size_t> default_edge_counts();
};

// One row per (m, instance). Bound columns are NaN when f is not
// decreasing convex.
struct BenchRecord {
  std::size_t m = 0;
  std::size_t instance_id = 0;
  RngSeed seed{};
  double optimum = 0.0;
  double greedy_mean = 0.0;
  double greedy_min = 0.0;
  double greedy_max = 0.0;
  double degree_cost = 0.0;
  double random_mean = 0.0;
  double jensen_bound = 0.0;
  double relaxation_bound = 0.0;
  double greedy_upper_bound = 0.0;
};

struct BenchSummary {
  std::size_t records = 0;
  double mean_greedy_ratio = 0.0;  // mean of greedy_mean / optimum
  double max_greedy_ratio = 0.0;
  double mean_degree_ratio = 0.0;
  bool within_five_percent = false;
};

// Throws InvariantError naming the offending record when a bound sandwich
// fails. Output order is (m, instance_id) regardless of thread count.
std::vector<BenchRecord> run_bench_fig3(const BenchConfig& config);

BenchSummary summarize(std::span<const BenchRecord> records);

// Seed of instance `instance_id` at edge count m.
RngSeed bench_instance_seed(RngSeed master, std::size_t m, std::size_t instance_id);

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace nanip
