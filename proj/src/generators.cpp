#include "nanip/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "nanip/error.hpp"

namespace nanip {

namespace {

std::vector<Edge> pruefer_tree_edges(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<NodeId> code(n - 2);
  for (auto& c : code) c = static_cast<NodeId>(rng.below(n));

  std::vector<std::size_t> remaining(n, 1);
  for (NodeId c : code) ++remaining[c];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  edges.reserve(n - 1);
  for (NodeId c : code) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--remaining[c] == 1) leaves.push(c);
  }
  const NodeId a = leaves.top();
  leaves.pop();
  const NodeId b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

}  // namespace

Graph gen_random_tree(std::size_t n, RngSeed seed) {
  if (n == 0) throw InputError("random tree requires n >= 1");
  Rng rng(seed);
  const auto edges = pruefer_tree_edges(n, rng);
  return Graph::from_edges(n, edges);
}

Graph gen_random_connected(std::size_t n, std::size_t m, RngSeed seed) {
  if (n == 0) throw InputError("random connected graph requires n >= 1");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m < n - 1 || m > max_edges) {
    throw InputError("edge count " + std::to_string(m) + " outside [" + std::to_string(n - 1) +
                     ", " + std::to_string(max_edges) + "] for n = " + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<Edge> edges = pruefer_tree_edges(n, rng);
  const std::size_t extra = m - (n - 1);
  if (extra == 0) return Graph::from_edges(n, edges);

  auto key = [n](NodeId u, NodeId v) { return static_cast<std::uint64_t>(u) * n + v; };
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (const auto& [u, v] : edges) present.insert(key(u, v));

  if (2 * m <= max_edges) {
    // Sparse target: rejection sampling over ordered pairs.
    while (edges.size() < m) {
      NodeId u = static_cast<NodeId>(rng.below(n));
      NodeId v = static_cast<NodeId>(rng.below(n - 1));
      if (v >= u) ++v;
      if (u > v) std::swap(u, v);
      if (present.insert(key(u, v)).second) edges.emplace_back(u, v);
    }
  } else {
    // Dense target: enumerate the complement and take a partial shuffle.
    std::vector<Edge> absent;
    absent.reserve(max_edges - (n - 1));
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!present.contains(key(u, v))) absent.emplace_back(u, v);
      }
    }
    for (std::size_t i = 0; i < extra; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(absent.size() - i));
      std::swap(absent[i], absent[j]);
      edges.push_back(absent[i]);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_gnp(std::size_t n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace nanip
