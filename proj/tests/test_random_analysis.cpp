#include <doctest.h>

#include <cmath>

#include "nanip/error.hpp"
#include "nanip/random_analysis.hpp"
#include "oracles.hpp"

using namespace nanip;
using namespace nanip::testing;
using doctest::Approx;

namespace {
const CostFunction kRecip1 = CostFunction::reciprocal(1);
}

TEST_CASE("expected_cost_exact worked values") {
  CHECK(expected_cost_exact({3, 1.0}, kRecip1) == Approx(11.0 / 6.0).epsilon(1e-14));
  CHECK(expected_cost_exact({2, 0.5}, kRecip1) == Approx(1.75).epsilon(1e-14));
  CHECK(expected_cost_exact({7, 0.0}, CostFunction::reciprocal(3)) == 21.0);
  CHECK(expected_cost_exact({0, 0.4}, kRecip1) == 0.0);
  for (std::size_t n : {1u, 4u, 9u, 30u}) {
    for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      const double expected = 2.0 * p * n * (n - 1) / 2.0 + 1.0 * n;
      CHECK(expected_cost_exact({n, p}, CostFunction::linear(2, 1)) == Approx(expected).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(expected_cost_exact({10, 0.5}, CostFunction::table({1, 0.5})), InputError);
  CHECK_THROWS_AS(expected_cost_exact({10, 1.5}, kRecip1), InputError);
}

TEST_CASE("expected_cost_exact agrees with full enumeration of graphs and orders") {
  const auto table = CostFunction::table({3, 1, 0.7, 0.2, 5});
  for (std::size_t n = 1; n <= 5; ++n) {
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
      CHECK(expected_cost_exact({n, p}, kRecip1) ==
            Approx(expected_cost_by_enumeration(n, p, kRecip1)).epsilon(1e-12));
      CHECK(expected_cost_exact({n, p}, table) == Approx(expected_cost_by_enumeration(n, p, table)).epsilon(1e-12));
    }
  }
}

TEST_CASE("expected_cost_upper") {
  CHECK(expected_cost_upper({3, 1.0}, kRecip1) == Approx(11.0 / 6.0).epsilon(1e-14));
  CHECK(expected_cost_upper({2, 0.5}, kRecip1) == Approx(3.0).epsilon(1e-14));
  CHECK_THROWS_AS(expected_cost_upper({4, 0.0}, kRecip1), InputError);
  for (std::size_t n = 2; n <= 30; ++n) {
    for (int step = 1; step <= 10; ++step) {
      const double p = step / 10.0;
      const double exact = expected_cost_exact({n, p}, kRecip1);
      const double upper = expected_cost_upper({n, p}, kRecip1);
      CHECK(upper >= exact - 1e-12);
      if (step < 10) CHECK(upper > exact);
    }
  }
}

TEST_CASE("closed form through 2F1 matches the double sum") {
  const auto table = CostFunction::table({2, 1.5, 1.2, 1, 0.9, 0.85, 0.8, 0.75, 0.7, 0.68, 0.66, 0.65});
  for (const CostFunction* f : {&kRecip1, &table}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (double p : {0.25, 0.5, 0.75}) {
        double closed = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          closed += (*f)(k) / p;
          closed -= (*f)(k) * static_cast<double>(binomial(n, k)) * std::pow(p, static_cast<double>(k)) *
                    std::pow(1.0 - p, static_cast<double>(n - k)) *
                    hypergeometric_2f1(1.0, n + 1.0, n + 1.0 - k, 1.0 - p);
        }
        CHECK(std::abs(closed - expected_cost_exact({n, p}, *f)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("Monte Carlo estimate") {
  const auto full = expected_cost_monte_carlo({6, 1.0}, kRecip1, 50, RngSeed{1});
  CHECK(full.mean == expected_cost_exact({6, 1.0}, kRecip1));
  CHECK(full.standard_error == 0.0);

  const auto est = expected_cost_monte_carlo({15, 0.3}, kRecip1, 10000, RngSeed{7});
  CHECK(std::abs(est.mean - expected_cost_exact({15, 0.3}, kRecip1)) <= 3 * est.standard_error);
  CHECK(est.trials == 10000);

  const auto again = expected_cost_monte_carlo({15, 0.3}, kRecip1, 10000, RngSeed{7});
  CHECK(again.mean == est.mean);
  CHECK(again.standard_error == est.standard_error);

  CHECK_THROWS_AS(expected_cost_monte_carlo({5, 0.3}, kRecip1, 0, RngSeed{1}), InputError);
}
