#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nanip/cost_model.hpp"
#include "nanip/graph.hpp"

namespace nanip {

struct IpVariable {
  enum class Type { binary, continuous };
  std::string name;
  Type type = Type::continuous;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct IpTerm {
  std::size_t var = 0;
  double coef = 0.0;
};

struct IpConstraint {
  enum class Sense { greater_equal, equal };
  std::string name;
  std::vector<IpTerm> terms;
  Sense sense = Sense::greater_equal;
  double rhs = 0.0;
};

// Mixed-integer model of the installation problem.
//   X_i_t  binary, node i installed at step t (t = 1..n)
//   E_i_j  in [0, 1] per ordered adjacent pair, 1 iff i precedes j
//   c_j    >= 0, cost paid for node j
// Rows, in emission order:
//   cut_j_d    c_j >= f(d) + (f(d) - f(d-1)) (sum_{i in N(j)} E_i_j - d), d = 1..deg(j)
//   prec_T_i_j E_i_j >= sum_{t<=T} (X_i_t - X_j_t),                      T = 1..n-1
//   pair_i_j   E_i_j + E_j_i = 1,                                        i < j
//   node_i     sum_t X_i_t = 1
//   time_t     sum_i X_i_t = 1
struct IpModel {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::vector<IpVariable> variables;
  std::vector<IpConstraint> constraints;
  std::vector<IpTerm> objective;  // minimized

  std::size_t num_cuts = 0;
  std::size_t num_precedence = 0;
  std::size_t num_coupling = 0;
  std::size_t num_assignment = 0;

  std::size_t x_var(NodeId node, std::size_t step) const;  // step is 1-based
  std::size_t e_var(NodeId from, NodeId to) const;
  std::size_t c_var(NodeId node) const;

  double objective_value(std::span<const double> point) const;
  // Largest violation over all rows and bounds at the point (0 when feasible).
  double max_violation(std::span<const double> point) const;

  std::vector<std::size_t> arc_offset;      // first E index of each node's out-arcs
  std::vector<std::vector<NodeId>> arcs;    // copy of adjacency for arc lookup
};

// Requires f decreasing convex on 0..deg(node) for every node.
IpModel build_ip(const Graph& g, const CostFunction& f);
IpModel build_ip(const Graph& g, std::span<const CostFunction> per_node);

// CPLEX LP text. Numbers use 17 significant digits; output is deterministic.
void write_lp(const IpModel& model, std::ostream& out);

// max over d = 1..max_d of the tangent line through (d-1, f(d-1)), (d, f(d)), at x.
double tangent_envelope(const CostFunction& f, std::size_t max_d, double x);

// X[i][t] = 1 iff node i is installed at step t + 1.
using AssignmentMatrix = std::vector<std::vector<double>>;

struct AssignmentCheck {
  InstallSequence sequence;
  CostReport cost;
  double model_objective = 0.0;
};

// Decodes the order from a 0/1 permutation matrix, completes it to a
// feasible model point (E from precedence, c at its minimum), and checks that
// the model objective matches the installation cost within 1e-6.
AssignmentCheck validate_assignment(const Graph& g, const CostFunction& f, const AssignmentMatrix& x);

AssignmentMatrix assignment_from_sequence(const InstallSequence& seq);

}  // namespace nanip
