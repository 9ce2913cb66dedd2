#include "nanip/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nanip/error.hpp"

namespace nanip {

void require_decreasing_convex(const Graph& g, const CostFunction& f) {
  const std::size_t domain = std::max<std::size_t>(1, g.max_degree());
  if (!f.covers(domain)) {
    throw InputError("cost function " + f.describe() + " does not cover 0.." + std::to_string(domain));
  }
  if (!is_decreasing_convex(f, domain)) {
    throw InputError("bound requires decreasing convex f (got " + f.describe() + ")");
  }
}

double jensen_subgraph_bound(const Graph& g, std::span<const NodeId> h_nodes, const CostFunction& f) {
  if (h_nodes.empty()) throw InputError("subgraph bound requires a nonempty node set");
  require_decreasing_convex(g, f);
  std::vector<char> in_h(g.num_nodes(), 0);
  for (NodeId v : h_nodes) {
    if (v >= g.num_nodes()) throw InputError("subgraph node " + std::to_string(v) + " outside the graph");
    if (in_h[v]) throw InputError("subgraph node " + std::to_string(v) + " listed twice");
    in_h[v] = 1;
  }
  // Each edge touching H contributes exactly one installed-neighbor count
  // inside H: internal edges once, cut edges once.
  std::size_t internal_twice = 0;
  std::size_t cut = 0;
  for (NodeId v : h_nodes) {
    for (NodeId u : g.neighbors(v)) {
      if (in_h[u]) {
        ++internal_twice;
      } else {
        ++cut;
      }
    }
  }
  const double size = static_cast<double>(h_nodes.size());
  const double mean = static_cast<double>(internal_twice / 2 + cut) / size;
  return size * f.interpolate(mean);
}

double jensen_whole_graph_bound(const Graph& g, const CostFunction& f) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  require_decreasing_convex(g, f);
  if (n == 1) return f(0);
  const double rest = static_cast<double>(n - 1);
  return f(0) + rest * f.interpolate(static_cast<double>(g.num_edges()) / rest);
}

RelaxationSolution relaxation_bound(const Graph& g, const CostFunction& f) {
  require_decreasing_convex(g, f);
  const std::size_t n = g.num_nodes();
  const std::size_t m = g.num_edges();
  RelaxationSolution sol;
  if (n == 0) return sol;

  const auto d = degree_sequence(g);
  std::vector<std::size_t> prefix(n + 1, 0);
  std::partial_sum(d.begin(), d.end(), prefix.begin() + 1);

  std::size_t pinned_sum = 0;
  if (d[0] * n > m) {
    sol.s = 0;
  } else {
    // Largest k (1-based) with (n - k) d_k + sum_{i<=k} d_i <= m; k = 1 always qualifies.
    for (std::size_t k = 1; k <= n; ++k) {
      if ((n - k) * d[k - 1] + prefix[k] <= m) sol.s = k;
    }
    pinned_sum = prefix[sol.s];
    sol.r = m - (n - sol.s) * d[sol.s - 1] - pinned_sum;
  }

  // The s < n unpinned entries share the remaining budget as evenly as
  // possible. When r <= n - s this is exactly d_s / d_s + 1 with r raised.
  const std::size_t free_count = n - sol.s;
  const std::size_t budget = m - pinned_sum;
  if (free_count > 0) {
    sol.level = budget / free_count;
    sol.raised = budget - sol.level * free_count;
  }

  sol.p_values.assign(n, 0);
  for (std::size_t i = 0; i < sol.s; ++i) sol.p_values[i] = d[i];
  // Raised entries go to the highest-degree slots.
  for (std::size_t i = sol.s; i < n; ++i) {
    sol.p_values[i] = sol.level + (i >= n - sol.raised ? 1 : 0);
    if (sol.p_values[i] > d[i]) {
      throw InvariantError("relaxation assignment exceeds degree cap at position " + std::to_string(i));
    }
  }
  for (std::size_t p : sol.p_values) sol.bound += f(p);
  return sol;
}

GreedyBoundSolution greedy_upper_bound(const Graph& g, const CostFunction& f) {
  const std::size_t n = g.num_nodes();
  if (n < 3) throw InputError("greedy upper bound requires n >= 3");
  if (!is_connected(g)) throw InputError("greedy upper bound requires a connected graph");
  require_decreasing_convex(g, f);

  const std::size_t m = g.num_edges();
  const auto d = degree_sequence(g);
  // suffix[i] = d_i + ... + d_n in 1-based terms, i.e. sum of d[i-1..n-1].
  std::vector<std::size_t> suffix(n + 2, 0);
  for (std::size_t i = n; i >= 1; --i) suffix[i] = suffix[i + 1] + d[i - 1];

  GreedyBoundSolution sol;
  bool found = false;
  for (std::size_t s = n - 2 + 1; s-- > 0;) {
    const std::size_t tail = s + 3 <= n ? suffix[s + 3] : 0;
    if (s + tail >= m) continue;
    const std::size_t q = m - s - tail;
    if (q >= 1 && q <= d[s + 1]) {
      sol.s = s;
      sol.q = q;
      found = true;
      break;
    }
  }

  if (!found) {
    sol.fallback = true;
    sol.bound = f(0) + static_cast<double>(n - 1) * f(1);
    return sol;
  }
  sol.bound = f(0) + static_cast<double>(sol.s) * f(1);
  if (d[n - 1] > 1) {
    sol.bound += f(sol.q);
    for (std::size_t i = sol.s + 3; i <= n; ++i) sol.bound += f(d[i - 1]);
  }
  return sol;
}

}  // namespace nanip
