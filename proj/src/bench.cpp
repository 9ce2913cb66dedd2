#include "nanip/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "nanip/bounds.hpp"
#include "nanip/error.hpp"
#include "nanip/exact.hpp"
#include "nanip/generators.hpp"
#include "nanip/heuristics.hpp"

namespace nanip {

namespace {

constexpr double kSlack = 1e-9;

// Stream tags keep graph, greedy, and random draws independent.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kGreedyStream = 1;
constexpr std::uint64_t kRandomStream = 2;

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string describe(const BenchRecord& r) {
  return "record m=" + std::to_string(r.m) + " instance=" + std::to_string(r.instance_id) +
         " optimum=" + real(r.optimum) + " greedy_min=" + real(r.greedy_min) +
         " greedy_mean=" + real(r.greedy_mean) + " jensen=" + real(r.jensen_bound) +
         " relaxation=" + real(r.relaxation_bound) + " greedy_upper=" + real(r.greedy_upper_bound);
}

void check_record(const BenchRecord& r, bool bounds_valid) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvariantError(std::string(what) + " violated in " + describe(r));
  };
  require(r.optimum <= r.greedy_min + kSlack, "optimum <= greedy_min");
  require(r.greedy_min <= r.greedy_mean + kSlack, "greedy_min <= greedy_mean");
  require(r.optimum <= r.degree_cost + kSlack, "optimum <= degree_cost");
  if (!bounds_valid) return;
  require(r.relaxation_bound <= r.optimum + kSlack, "relaxation_bound <= optimum");
  require(r.jensen_bound <= r.optimum + kSlack, "jensen_bound <= optimum");
  require(r.greedy_max <= r.greedy_upper_bound + kSlack, "greedy run <= greedy_upper_bound");
}

BenchRecord run_instance(const BenchConfig& config, std::size_t m, std::size_t instance_id) {
  BenchRecord rec;
  rec.m = m;
  rec.instance_id = instance_id;
  rec.seed = bench_instance_seed(config.master_seed, m, instance_id);
  const Graph g = gen_random_connected(config.num_nodes, m, rec.seed);
  const CostFunction& f = config.cost;

  rec.optimum = dp_optimal(g, f).total;
  rec.greedy_min = std::numeric_limits<double>::infinity();
  rec.greedy_max = -std::numeric_limits<double>::infinity();
  double greedy_sum = 0.0;
  double random_sum = 0.0;
  for (std::size_t run = 0; run < config.greedy_runs; ++run) {
    const double cost =
        greedy(g, f, derive_seed(config.master_seed, {kGreedyStream, m, instance_id, run})).report.total;
    greedy_sum += cost;
    rec.greedy_min = std::min(rec.greedy_min, cost);
    rec.greedy_max = std::max(rec.greedy_max, cost);
    random_sum +=
        random_sequence(g, f, derive_seed(config.master_seed, {kRandomStream, m, instance_id, run})).report.total;
  }
  const double runs = static_cast<double>(config.greedy_runs);
  rec.greedy_mean = greedy_sum / runs;
  rec.random_mean = random_sum / runs;
  rec.degree_cost = degree_descending(g, f).report.total;

  const std::size_t domain = std::max<std::size_t>(1, g.max_degree());
  const bool bounds_valid = f.covers(domain) && is_decreasing_convex(f, domain);
  if (bounds_valid) {
    rec.jensen_bound = jensen_whole_graph_bound(g, f);
    rec.relaxation_bound = relaxation_bound(g, f).bound;
    rec.greedy_upper_bound = greedy_upper_bound(g, f).bound;
  } else {
    rec.jensen_bound = rec.relaxation_bound = rec.greedy_upper_bound = std::numeric_limits<double>::quiet_NaN();
  }
  check_record(rec, bounds_valid);
  return rec;
}

}  // namespace

std::vector<std::size_t> BenchConfig::default_edge_counts() {
  std::vector<std::size_t> ms;
  for (std::size_t m = 14; m <= 105; m += 7) ms.push_back(m);
  return ms;
}

RngSeed bench_instance_seed(RngSeed master, std::size_t m, std::size_t instance_id) {
  return derive_seed(master, {kGraphStream, m, instance_id});
}

std::vector<BenchRecord> run_bench_fig3(const BenchConfig& config) {
  if (config.num_nodes < 3) throw InputError("benchmark requires n >= 3");
  if (config.num_nodes > kDpMaxNodes) {
    throw SizeLimitError("benchmark n exceeds the dynamic program's limit of " + std::to_string(kDpMaxNodes));
  }
  if (config.instances_per_m == 0 || config.greedy_runs == 0) {
    throw InputError("benchmark needs at least one instance and one greedy run");
  }
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t m : config.edge_counts) {
    const std::size_t n = config.num_nodes;
    if (m < n - 1 || m > n * (n - 1) / 2) {
      throw InputError("edge count " + std::to_string(m) + " not realizable by a connected graph on " +
                       std::to_string(n) + " nodes");
    }
    for (std::size_t i = 0; i < config.instances_per_m; ++i) jobs.emplace_back(m, i);
  }
  std::sort(jobs.begin(), jobs.end());

  std::vector<BenchRecord> records(jobs.size());
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = jobs.size();
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        records[k] = run_instance(config, jobs[k].first, jobs[k].second);
      } catch (...) {
        // Report the first failing job in output order, not completion order.
        std::lock_guard lock(failure_mutex);
        if (k < failure_index) {
          failure_index = k;
          failure = std::current_exception();
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

BenchSummary summarize(std::span<const BenchRecord> records) {
  BenchSummary s;
  s.records = records.size();
  if (records.empty()) return s;
  double ratio_sum = 0.0;
  double degree_sum = 0.0;
  for (const auto& r : records) {
    const double ratio = r.greedy_mean / r.optimum;
    ratio_sum += ratio;
    degree_sum += r.degree_cost / r.optimum;
    s.max_greedy_ratio = std::max(s.max_greedy_ratio, ratio);
  }
  s.mean_greedy_ratio = ratio_sum / static_cast<double>(records.size());
  s.mean_degree_ratio = degree_sum / static_cast<double>(records.size());
  s.within_five_percent = s.mean_greedy_ratio <= 1.05;
  return s;
}

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "m,instance_id,seed,optimum,greedy_mean,greedy_min,degree_cost,random_mean,"
         "jensen_bound,relaxation_bound,greedy_upper_bound\n";
  for (const auto& r : records) {
    out << r.m << ',' << r.instance_id << ',' << r.seed.value << ',' << real(r.optimum) << ','
        << real(r.greedy_mean) << ',' << real(r.greedy_min) << ',' << real(r.degree_cost) << ','
        << real(r.random_mean) << ',' << real(r.jensen_bound) << ',' << real(r.relaxation_bound) << ','
        << real(r.greedy_upper_bound) << '\n';
  }
}

}  // namespace nanip
