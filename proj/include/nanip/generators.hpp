#pragma once

#include <cstddef>

#include "nanip/graph.hpp"
#include "nanip/rng.hpp"

namespace nanip {

// Uniform labeled tree on n nodes, decoded from a uniform Pruefer sequence.
Graph gen_random_tree(std::size_t n, RngSeed seed);

// Random tree plus m - (n - 1) extra edges drawn uniformly without
// replacement from the absent node pairs. Requires n - 1 <= m <= n(n-1)/2.
Graph gen_random_connected(std::size_t n, std::size_t m, RngSeed seed);

// Erdos-Renyi G(n, p); may be disconnected.
Graph gen_gnp(std::size_t n, double p, RngSeed seed);

}  // namespace nanip
