#include "nanip/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace nanip {

namespace {

// Nodes grouped by installed-neighbor count with O(1) insert/remove.
class RBuckets {
 public:
  RBuckets(std::size_t num_nodes, std::size_t max_r)
      : buckets_(max_r + 1), slot_(num_nodes, 0), r_(num_nodes, 0) {}

  void insert(NodeId v, std::size_t r) {
    r_[v] = r;
    slot_[v] = buckets_[r].size();
    buckets_[r].push_back(v);
  }

  void erase(NodeId v) {
    auto& bucket = buckets_[r_[v]];
    const NodeId moved = bucket.back();
    bucket[slot_[v]] = moved;
    slot_[moved] = slot_[v];
    bucket.pop_back();
  }

  void bump(NodeId v) {
    const std::size_t r = r_[v];
    erase(v);
    insert(v, r + 1);
  }

  const std::vector<NodeId>& bucket(std::size_t r) const { return buckets_[r]; }
  std::size_t num_buckets() const { return buckets_.size(); }

 private:
  std::vector<std::vector<NodeId>> buckets_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> r_;
};

}  // namespace

HeuristicResult greedy(const Graph& g, const CostFunction& f, RngSeed seed) {
  const std::size_t n = g.num_nodes();
  HeuristicResult result;
  if (n == 0) return result;
  require_covers_degrees(g, f);

  const auto fv = f.tabulate(g.max_degree());
  Rng rng(seed);
  RBuckets buckets(n, g.max_degree());
  for (NodeId v = 0; v < n; ++v) buckets.insert(v, 0);
  std::vector<char> installed(n, 0);
  std::vector<NodeId> order;
  order.reserve(n);

  auto install = [&](NodeId v) {
    buckets.erase(v);
    installed[v] = 1;
    order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (!installed[u]) buckets.bump(u);
    }
  };

  install(static_cast<NodeId>(rng.below(n)));
  while (order.size() < n) {
    double best = 0.0;
    std::size_t tied = 0;
    for (std::size_t r = 0; r < buckets.num_buckets(); ++r) {
      const auto& bucket = buckets.bucket(r);
      if (bucket.empty()) continue;
      if (tied == 0 || fv[r] < best) {
        best = fv[r];
        tied = bucket.size();
      } else if (fv[r] == best) {
        tied += bucket.size();
      }
    }
    // Uniform choice over all nodes whose cost equals the minimum.
    std::size_t pick = static_cast<std::size_t>(rng.below(tied));
    NodeId chosen = 0;
    for (std::size_t r = 0; r < buckets.num_buckets(); ++r) {
      const auto& bucket = buckets.bucket(r);
      if (bucket.empty() || fv[r] != best) continue;
      if (pick < bucket.size()) {
        chosen = bucket[pick];
        break;
      }
      pick -= bucket.size();
    }
    install(chosen);
  }

  result.sequence = InstallSequence(std::move(order));
  result.report = sequence_cost(g, f, result.sequence);
  return result;
}

HeuristicResult degree_descending(const Graph& g, const CostFunction& f) {
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&g](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  HeuristicResult result;
  result.sequence = InstallSequence(std::move(order));
  result.report = sequence_cost(g, f, result.sequence);
  return result;
}

HeuristicResult random_sequence(const Graph& g, const CostFunction& f, RngSeed seed) {
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);
  }
  HeuristicResult result;
  result.sequence = InstallSequence(std::move(order));
  result.report = sequence_cost(g, f, result.sequence);
  return result;
}

}  // namespace nanip
