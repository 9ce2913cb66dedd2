#pragma once

#include <cstddef>

#include "nanip/cost_model.hpp"
#include "nanip/rng.hpp"

namespace nanip {

// Erdos-Renyi G(n, p).
struct ErModel {
  std::size_t n = 0;
  double p = 0.0;
};

// E[C] over G(n, p) and a uniform random order:
//   sum_{t=1}^{n} sum_{k=0}^{t-1} C(t-1, k) p^k (1-p)^{t-1-k} f(k).
double expected_cost_exact(const ErModel& model, const CostFunction& f);

// (1 / p) sum_{k=0}^{n-1} f(k); requires p > 0.
double expected_cost_upper(const ErModel& model, const CostFunction& f);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

// Mean cost over independent (graph, order) draws. Trial i uses seeds
// derived from (seed, i), so results do not depend on evaluation order.
MonteCarloEstimate expected_cost_monte_carlo(const ErModel& model, const CostFunction& f,
                                             std::size_t trials, RngSeed seed);

}  // namespace nanip
