#pragma once

#include "nanip/cost_model.hpp"
#include "nanip/graph.hpp"
#include "nanip/rng.hpp"

namespace nanip {

struct HeuristicResult {
  InstallSequence sequence;
  CostReport report;
};

// Cost-greedy: a uniformly random first node, then repeatedly an uninstalled
// node of minimum current cost f(r), ties broken uniformly at random.
// Candidates sit in buckets keyed by r, so each step scans at most
// max_degree + 1 buckets and each installation touches only its neighbors.
HeuristicResult greedy(const Graph& g, const CostFunction& f, RngSeed seed);

// Highest degree first, ties by ascending node id.
HeuristicResult degree_descending(const Graph& g, const CostFunction& f);

// Uniform random permutation (Fisher-Yates).
HeuristicResult random_sequence(const Graph& g, const CostFunction& f, RngSeed seed);

}  // namespace nanip
