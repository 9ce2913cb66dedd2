#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "nanip/cost_model.hpp"
#include "nanip/graph.hpp"

namespace nanip {

using NodeMask = std::uint64_t;

// Cost of installing `node` once exactly the nodes in `installed` are in
// place. Must depend only on the set, not on the order it was built in.
using SubgraphCostOracle = std::function<double(NodeId node, NodeMask installed)>;

struct ExactSolution {
  InstallSequence sequence;
  double total = 0.0;
};

inline constexpr std::size_t kBruteForceMaxNodes = 10;
inline constexpr std::size_t kDpMaxNodes = 26;

// Enumerates all n! orders; returns the lexicographically smallest optimum.
ExactSolution brute_force_optimal(const Graph& g, const CostFunction& f);

// Subset dynamic program over `num_nodes` nodes. Layer t holds the best cost
// of every t-subset; only two layers are live, plus one predecessor byte per
// subset for reconstruction. Ties prefer the smaller last node.
ExactSolution dp_optimal(std::size_t num_nodes, const SubgraphCostOracle& cost);

// Neighbor-aided instance: cost(u, S) = f(|N(u) & S|).
SubgraphCostOracle neighbor_aided_oracle(const Graph& g, const CostFunction& f);
ExactSolution dp_optimal(const Graph& g, const CostFunction& f);

// n minus the optimal cost under the 0/1 indicator cost, which is the size
// of a maximum independent set.
std::size_t independence_number_check(const Graph& g);

// Adjacency rows as bitmasks; requires n <= 64.
std::vector<NodeMask> adjacency_masks(const Graph& g);

}  // namespace nanip
