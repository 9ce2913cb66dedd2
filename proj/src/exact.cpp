#include "nanip/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nanip/error.hpp"

namespace nanip {

std::vector<NodeMask> adjacency_masks(const Graph& g) {
  if (g.num_nodes() > 64) throw SizeLimitError("bitmask solvers support at most 64 nodes");
  std::vector<NodeMask> masks(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId u : g.neighbors(v)) masks[v] |= NodeMask{1} << u;
  }
  return masks;
}

ExactSolution brute_force_optimal(const Graph& g, const CostFunction& f) {
  const std::size_t n = g.num_nodes();
  if (n > kBruteForceMaxNodes) {
    throw SizeLimitError("brute force is limited to n <= " + std::to_string(kBruteForceMaxNodes) +
                         " (got n = " + std::to_string(n) + ")");
  }
  require_covers_degrees(g, f);
  const auto adj = adjacency_masks(g);
  const auto fv = f.tabulate(g.max_degree());

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  ExactSolution best;
  best.total = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    NodeMask installed = 0;
    for (NodeId v : order) {
      total += fv[static_cast<std::size_t>(std::popcount(adj[v] & installed))];
      installed |= NodeMask{1} << v;
    }
    if (total < best.total) {
      best.total = total;
      best.sequence = InstallSequence(order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (n == 0) best.total = 0.0;
  return best;
}

namespace {

// binom[a][b] for 0 <= a, b <= n.
std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    c[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
  }
  return c;
}

}  // namespace

ExactSolution dp_optimal(std::size_t n, const SubgraphCostOracle& cost) {
  if (n > kDpMaxNodes) {
    throw SizeLimitError("dynamic program is limited to n <= " + std::to_string(kDpMaxNodes) +
                         " (got n = " + std::to_string(n) + ")");
  }
  if (n == 0) return {};

  // Same-size subsets in ascending numeric order are in colex order, so a
  // subset's index within its layer is its colex rank sum_i C(b_i, i + 1).
  const auto binom = binomial_table(n);
  std::vector<std::uint8_t> last_node(std::size_t{1} << n, 0);
  std::vector<double> prev{0.0};  // layer 0: the empty set
  std::vector<double> next;
  std::vector<NodeId> bits(n);
  std::vector<std::uint64_t> below_rank(n + 1);  // sum of C(b_i, i+1) over i < j
  std::vector<std::uint64_t> above_rank(n + 1);  // sum of C(b_i, i)   over i > j

  for (std::size_t t = 1; t <= n; ++t) {
    next.assign(binom[n][t], 0.0);
    NodeMask mask = (NodeMask{1} << t) - 1;
    const NodeMask limit = NodeMask{1} << n;
    std::size_t rank = 0;
    while (mask < limit) {
      std::size_t k = 0;
      for (NodeMask rest = mask; rest; rest &= rest - 1) bits[k++] = static_cast<NodeId>(std::countr_zero(rest));
      below_rank[0] = 0;
      for (std::size_t j = 0; j < t; ++j) below_rank[j + 1] = below_rank[j] + binom[bits[j]][j + 1];
      above_rank[t] = 0;
      for (std::size_t j = t; j-- > 0;) above_rank[j] = above_rank[j + 1] + (j + 1 < t ? binom[bits[j + 1]][j + 1] : 0);

      double best = std::numeric_limits<double>::infinity();
      NodeId best_node = 0;
      for (std::size_t j = 0; j < t; ++j) {
        const NodeId u = bits[j];
        const NodeMask without = mask & ~(NodeMask{1} << u);
        const std::uint64_t sub_rank = below_rank[j] + above_rank[j];
        const double c = prev[sub_rank] + cost(u, without);
        if (c < best) {
          best = c;
          best_node = u;
        }
      }
      next[rank] = best;
      last_node[mask] = static_cast<std::uint8_t>(best_node);
      ++rank;

      // Gosper's hack: next larger mask with the same popcount.
      const NodeMask low = mask & (0 - mask);
      const NodeMask ripple = mask + low;
      mask = ripple | (((ripple ^ mask) >> 2) / low);
    }
    prev.swap(next);
  }

  ExactSolution sol;
  sol.total = prev[0];
  std::vector<NodeId> order(n);
  NodeMask mask = (n == 64) ? ~NodeMask{0} : (NodeMask{1} << n) - 1;
  for (std::size_t t = n; t-- > 0;) {
    order[t] = last_node[mask];
    mask &= ~(NodeMask{1} << order[t]);
  }
  sol.sequence = InstallSequence(std::move(order));
  return sol;
}

SubgraphCostOracle neighbor_aided_oracle(const Graph& g, const CostFunction& f) {
  require_covers_degrees(g, f);
  auto adj = adjacency_masks(g);
  auto fv = f.tabulate(g.max_degree());
  return [adj = std::move(adj), fv = std::move(fv)](NodeId u, NodeMask installed) {
    return fv[static_cast<std::size_t>(std::popcount(adj[u] & installed))];
  };
}

ExactSolution dp_optimal(const Graph& g, const CostFunction& f) {
  if (g.num_nodes() > kDpMaxNodes) {
    throw SizeLimitError("dynamic program is limited to n <= " + std::to_string(kDpMaxNodes) +
                         " (got n = " + std::to_string(g.num_nodes()) + ")");
  }
  return dp_optimal(g.num_nodes(), neighbor_aided_oracle(g, f));
}

std::size_t independence_number_check(const Graph& g) {
  const auto sol = dp_optimal(g, CostFunction::indicator());
  return g.num_nodes() - static_cast<std::size_t>(std::llround(sol.total));
}

}  // namespace nanip
