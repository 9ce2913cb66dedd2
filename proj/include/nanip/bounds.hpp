#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nanip/cost_model.hpp"
#include "nanip/graph.hpp"

namespace nanip {

// Optimum of the degree-capped relaxation: minimize sum f(p_i) subject to
// sum p_i = m and 0 <= p_i <= d_i, with d sorted ascending.
struct RelaxationSolution {
  std::size_t s = 0;       // number of entries pinned at their degree cap
  std::size_t r = 0;       // m - (n - s) d_s - sum_{i<=s} d_i; 0 when s == 0
  std::size_t level = 0;   // unpinned entries take level or level + 1
  std::size_t raised = 0;  // how many unpinned entries take level + 1
  std::vector<std::size_t> p_values;  // aligned with degree_sequence(g)
  double bound = 0.0;
};

// Worst case of the greedy heuristic from the degree sequence:
// f(0) + s f(1) + f(q) + f(d_{s+3}) + ... + f(d_n) with the largest feasible s.
struct GreedyBoundSolution {
  std::size_t s = 0;
  std::size_t q = 0;
  bool fallback = false;  // no feasible (s, q); bound is f(0) + (n-1) f(1)
  double bound = 0.0;
};

// Lower bound on installing h_nodes after every other node is in place:
// |V_H| * f((|E_H| + |E_GH|) / |V_H|) with f interpolated.
double jensen_subgraph_bound(const Graph& g, std::span<const NodeId> h_nodes, const CostFunction& f);

// f(0) + (n - 1) f(m / (n - 1)); f(0) for a single node.
double jensen_whole_graph_bound(const Graph& g, const CostFunction& f);

RelaxationSolution relaxation_bound(const Graph& g, const CostFunction& f);

// Requires a connected graph with n >= 3.
GreedyBoundSolution greedy_upper_bound(const Graph& g, const CostFunction& f);

// Throws InputError unless f is decreasing convex on 0..max(1, max_degree(g)).
void require_decreasing_convex(const Graph& g, const CostFunction& f);

}  // namespace nanip
