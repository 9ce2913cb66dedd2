#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nanip/graph.hpp"

namespace nanip {

// Installation cost as a function of the number of already-installed
// neighbors. Values are nonnegative over the supported domain.
class CostFunction {
 public:
  enum class Kind { table, reciprocal, linear, indicator };

  // f(k) = values[k]; domain 0..values.size()-1.
  static CostFunction table(std::vector<double> values);
  // f(k) = a / (1 + k), a >= 0.
  static CostFunction reciprocal(double a);
  // f(k) = a k + b. Evaluation throws where the value would be negative.
  static CostFunction linear(double a, double b);
  // f(0) = 0, f(k) = 1 for k >= 1.
  static CostFunction indicator();

  Kind kind() const { return kind_; }

  // Largest supported argument; nullopt for the closed-form kinds.
  std::optional<std::size_t> max_argument() const;
  bool covers(std::size_t k) const;

  // Throws InputError outside the domain.
  double operator()(std::size_t k) const;

  // Piecewise-linear extension to real q in [0, D].
  double interpolate(double q) const;

  // f(0..max_arg), checked against the domain.
  std::vector<double> tabulate(std::size_t max_arg) const;

  // Round-trippable spec string ("reciprocal:12", "table:[5,4,3]", ...).
  std::string describe() const;

 private:
  CostFunction(Kind kind, double a, double b, std::vector<double> values)
      : kind_(kind), a_(a), b_(b), values_(std::move(values)) {}

  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<double> values_;
};

// f nonincreasing on 0..max_arg.
bool is_decreasing(const CostFunction& f, std::size_t max_arg);

// f nonincreasing with nonincreasing successive drops f(i) - f(i+1) on 0..max_arg.
bool is_decreasing_convex(const CostFunction& f, std::size_t max_arg);

// "reciprocal:<a>", "linear:<a>,<b>", "indicator", "table:<path>" where the
// file holds whitespace-separated reals f(0), f(1), ...
CostFunction parse_cost_spec(std::string_view spec);
CostFunction parse_cost_table(std::istream& in);

// A node order; order()[t] is the node installed at step t + 1.
class InstallSequence {
 public:
  InstallSequence() = default;
  explicit InstallSequence(std::vector<NodeId> order) : order_(std::move(order)) {}

  std::span<const NodeId> order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  NodeId operator[](std::size_t t) const { return order_[t]; }

  friend bool operator==(const InstallSequence&, const InstallSequence&) = default;

 private:
  std::vector<NodeId> order_;
};

// Throws InputError unless seq is a permutation of 0..n-1.
void require_permutation(const InstallSequence& seq, std::size_t n);

struct CostReport {
  std::vector<std::size_t> r_values;  // installed-neighbor count per step
  std::vector<double> node_costs;     // f(r) per step
  double total = 0.0;
};

// Per step, the number of neighbors installed earlier in the sequence.
std::vector<std::size_t> installed_neighbor_counts(const Graph& g, const InstallSequence& seq);

// Total installation cost; f must cover 0..max_degree(g). The total is
// accumulated in installation order.
CostReport sequence_cost(const Graph& g, const CostFunction& f, const InstallSequence& seq);

// Throws InputError when f does not cover 0..max_degree(g).
void require_covers_degrees(const Graph& g, const CostFunction& f);

}  // namespace nanip
