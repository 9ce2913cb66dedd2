#include "nanip/random_analysis.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nanip/error.hpp"
#include "nanip/generators.hpp"
#include "nanip/heuristics.hpp"

namespace nanip {

namespace {

void require_model(const ErModel& model, const CostFunction& f) {
  if (!(model.p >= 0.0 && model.p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (model.n > 0 && !f.covers(model.n - 1)) {
    throw InputError("cost function " + f.describe() + " does not cover 0.." + std::to_string(model.n - 1));
  }
}

}  // namespace

double expected_cost_exact(const ErModel& model, const CostFunction& f) {
  require_model(model, f);
  const std::size_t n = model.n;
  const double p = model.p;
  if (n == 0) return 0.0;
  if (p == 0.0) return static_cast<double>(n) * f(0);
  if (p == 1.0) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += f(k);
    return total;
  }
  const auto fv = f.tabulate(n - 1);
  // row[k] = P(Binomial(t-1, p) = k), advanced one trial per step.
  std::vector<double> row{1.0};
  row.reserve(n);
  double total = 0.0;
  for (std::size_t t = 1; t <= n; ++t) {
    if (t > 1) {
      row.push_back(0.0);
      for (std::size_t k = row.size() - 1; k > 0; --k) row[k] = (1.0 - p) * row[k] + p * row[k - 1];
      row[0] *= 1.0 - p;
    }
    for (std::size_t k = 0; k < row.size(); ++k) total += row[k] * fv[k];
  }
  return total;
}

double expected_cost_upper(const ErModel& model, const CostFunction& f) {
  require_model(model, f);
  if (model.p <= 0.0) throw InputError("expected-cost upper bound requires p > 0");
  double sum = 0.0;
  for (std::size_t k = 0; k < model.n; ++k) sum += f(k);
  return sum / model.p;
}

MonteCarloEstimate expected_cost_monte_carlo(const ErModel& model, const CostFunction& f,
                                             std::size_t trials, RngSeed seed) {
  require_model(model, f);
  if (trials == 0) throw InputError("Monte Carlo estimate requires at least one trial");
  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const Graph g = gen_gnp(model.n, model.p, derive_seed(seed, {i, 0}));
    const double cost = random_sequence(g, f, derive_seed(seed, {i, 1})).report.total;
    const double delta = cost - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (cost - mean);
  }
  MonteCarloEstimate est;
  est.mean = mean;
  est.trials = trials;
  if (trials > 1) {
    const double variance = m2 / static_cast<double>(trials - 1);
    est.standard_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

}  // namespace nanip
