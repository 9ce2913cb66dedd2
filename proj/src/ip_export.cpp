#include "nanip/ip_export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "nanip/error.hpp"

namespace nanip {

std::size_t IpModel::x_var(NodeId node, std::size_t step) const {
  return static_cast<std::size_t>(node) * num_nodes + (step - 1);
}

std::size_t IpModel::e_var(NodeId from, NodeId to) const {
  const auto& nbrs = arcs[from];
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), to);
  if (it == nbrs.end() || *it != to) {
    throw InputError("no arc " + std::to_string(from) + " -> " + std::to_string(to));
  }
  return num_nodes * num_nodes + arc_offset[from] + static_cast<std::size_t>(it - nbrs.begin());
}

std::size_t IpModel::c_var(NodeId node) const { return num_nodes * num_nodes + 2 * num_edges + node; }

double IpModel::objective_value(std::span<const double> point) const {
  double total = 0.0;
  for (const auto& t : objective) total += t.coef * point[t.var];
  return total;
}

double IpModel::max_violation(std::span<const double> point) const {
  double worst = 0.0;
  for (std::size_t v = 0; v < variables.size(); ++v) {
    worst = std::max({worst, variables[v].lower - point[v], point[v] - variables[v].upper});
    if (variables[v].type == IpVariable::Type::binary) {
      worst = std::max(worst, std::min(std::abs(point[v]), std::abs(point[v] - 1.0)));
    }
  }
  for (const auto& row : constraints) {
    double lhs = 0.0;
    for (const auto& t : row.terms) lhs += t.coef * point[t.var];
    const double gap = row.rhs - lhs;
    worst = std::max(worst, row.sense == IpConstraint::Sense::equal ? std::abs(gap) : gap);
  }
  return worst;
}

double tangent_envelope(const CostFunction& f, std::size_t max_d, double x) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t d = 1; d <= max_d; ++d) {
    const double slope = f(d) - f(d - 1);
    best = std::max(best, f(d) + slope * (x - static_cast<double>(d)));
  }
  return best;
}

namespace {

std::string name3(const char* prefix, std::size_t a, std::size_t b) {
  return std::string(prefix) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

std::string name4(const char* prefix, std::size_t a, std::size_t b, std::size_t c) {
  return name3(prefix, a, b) + "_" + std::to_string(c);
}

}  // namespace

IpModel build_ip(const Graph& g, std::span<const CostFunction> per_node) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw InputError("model requires at least one node");
  if (per_node.size() != n) {
    throw InputError("expected " + std::to_string(n) + " per-node cost functions, got " +
                     std::to_string(per_node.size()));
  }
  for (NodeId j = 0; j < n; ++j) {
    const std::size_t deg = g.degree(j);
    if (!per_node[j].covers(deg) || !is_decreasing_convex(per_node[j], deg)) {
      throw InputError("model requires decreasing convex f on 0.." + std::to_string(deg) +
                       " for node " + std::to_string(j) + " (got " + per_node[j].describe() + ")");
    }
  }

  IpModel model;
  model.num_nodes = n;
  model.num_edges = g.num_edges();
  model.arcs.resize(n);
  model.arc_offset.resize(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    const auto nbrs = g.neighbors(i);
    model.arcs[i].assign(nbrs.begin(), nbrs.end());
    model.arc_offset[i + 1] = model.arc_offset[i] + nbrs.size();
  }

  using Type = IpVariable::Type;
  using Sense = IpConstraint::Sense;
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t t = 1; t <= n; ++t) model.variables.push_back({name3("X", i, t), Type::binary, 0.0, 1.0});
  }
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g.neighbors(i)) model.variables.push_back({name3("E", i, j), Type::continuous, 0.0, 1.0});
  }
  for (NodeId j = 0; j < n; ++j) {
    // An isolated node has no cut rows; its cost is pinned by the bound.
    const double lower = g.degree(j) == 0 ? per_node[j](0) : 0.0;
    model.variables.push_back({"c_" + std::to_string(j), Type::continuous, lower,
                               std::numeric_limits<double>::infinity()});
  }

  for (NodeId j = 0; j < n; ++j) {
    const auto& f = per_node[j];
    for (std::size_t d = 1; d <= g.degree(j); ++d) {
      const double slope = f(d) - f(d - 1);
      IpConstraint row{name3("cut", j, d), {{model.c_var(j), 1.0}}, Sense::greater_equal,
                       f(d) - slope * static_cast<double>(d)};
      if (slope != 0.0) {
        for (NodeId i : g.neighbors(j)) row.terms.push_back({model.e_var(i, j), -slope});
      }
      model.constraints.push_back(std::move(row));
      ++model.num_cuts;
    }
  }
  for (std::size_t big_t = 1; big_t < n; ++big_t) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j : g.neighbors(i)) {
        IpConstraint row{name4("prec", big_t, i, j), {{model.e_var(i, j), 1.0}}, Sense::greater_equal, 0.0};
        for (std::size_t t = 1; t <= big_t; ++t) {
          row.terms.push_back({model.x_var(i, t), -1.0});
          row.terms.push_back({model.x_var(j, t), 1.0});
        }
        model.constraints.push_back(std::move(row));
        ++model.num_precedence;
      }
    }
  }
  for (const auto& [i, j] : g.edges()) {
    model.constraints.push_back(
        {name3("pair", i, j), {{model.e_var(i, j), 1.0}, {model.e_var(j, i), 1.0}}, Sense::equal, 1.0});
    ++model.num_coupling;
  }
  for (NodeId i = 0; i < n; ++i) {
    IpConstraint row{"node_" + std::to_string(i), {}, Sense::equal, 1.0};
    for (std::size_t t = 1; t <= n; ++t) row.terms.push_back({model.x_var(i, t), 1.0});
    model.constraints.push_back(std::move(row));
    ++model.num_assignment;
  }
  for (std::size_t t = 1; t <= n; ++t) {
    IpConstraint row{"time_" + std::to_string(t), {}, Sense::equal, 1.0};
    for (NodeId i = 0; i < n; ++i) row.terms.push_back({model.x_var(i, t), 1.0});
    model.constraints.push_back(std::move(row));
    ++model.num_assignment;
  }
  for (NodeId j = 0; j < n; ++j) model.objective.push_back({model.c_var(j), 1.0});
  return model;
}

IpModel build_ip(const Graph& g, const CostFunction& f) {
  const std::vector<CostFunction> per_node(g.num_nodes(), f);
  return build_ip(g, per_node);
}

namespace {

std::string lp_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

constexpr std::size_t kTermsPerLine = 8;

void write_terms(const IpModel& model, std::span<const IpTerm> terms, std::ostream& out) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) out << "\n   ";
    const double c = terms[k].coef;
    const std::string& name = model.variables[terms[k].var].name;
    if (k == 0) {
      if (c == 1.0) {
        out << ' ' << name;
      } else if (c == -1.0) {
        out << " - " << name;
      } else {
        out << ' ' << lp_number(c) << ' ' << name;
      }
      continue;
    }
    out << (c < 0 ? " - " : " + ");
    const double mag = std::abs(c);
    if (mag != 1.0) out << lp_number(mag) << ' ';
    out << name;
  }
}

}  // namespace

void write_lp(const IpModel& model, std::ostream& out) {
  out << "\\ Neighbor-aided installation model: " << model.num_nodes << " nodes, " << model.num_edges
      << " edges\n";
  out << "Minimize\n obj:";
  write_terms(model, model.objective, out);
  out << "\nSubject To\n";
  for (const auto& row : model.constraints) {
    out << ' ' << row.name << ':';
    write_terms(model, row.terms, out);
    out << (row.sense == IpConstraint::Sense::equal ? " = " : " >= ") << lp_number(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : model.variables) {
    if (v.type == IpVariable::Type::binary) continue;
    if (std::isinf(v.upper)) {
      out << ' ' << v.name << " >= " << lp_number(v.lower) << '\n';
    } else {
      out << ' ' << lp_number(v.lower) << " <= " << v.name << " <= " << lp_number(v.upper) << '\n';
    }
  }
  out << "Binaries\n";
  std::size_t on_line = 0;
  for (const auto& v : model.variables) {
    if (v.type != IpVariable::Type::binary) continue;
    out << ' ' << v.name;
    if (++on_line == kTermsPerLine) {
      out << '\n';
      on_line = 0;
    }
  }
  if (on_line) out << '\n';
  out << "End\n";
  if (!out) throw Error("failed writing LP model");
}

AssignmentMatrix assignment_from_sequence(const InstallSequence& seq) {
  const std::size_t n = seq.size();
  AssignmentMatrix x(n, std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) x[seq[t]][t] = 1.0;
  return x;
}

AssignmentCheck validate_assignment(const Graph& g, const CostFunction& f, const AssignmentMatrix& x) {
  const std::size_t n = g.num_nodes();
  if (x.size() != n) throw InputError("assignment has " + std::to_string(x.size()) + " rows, expected " + std::to_string(n));
  std::vector<NodeId> order(n, 0);
  std::vector<std::size_t> column_hits(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    if (x[i].size() != n) throw InputError("assignment row " + std::to_string(i) + " has wrong length");
    std::size_t row_hits = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = x[i][t];
      if (v != 0.0 && v != 1.0) {
        throw InputError("assignment entry X[" + std::to_string(i) + "][" + std::to_string(t + 1) +
                         "] is not 0/1");
      }
      if (v == 1.0) {
        ++row_hits;
        ++column_hits[t];
        order[t] = i;
      }
    }
    if (row_hits != 1) {
      throw InputError("assignment row " + std::to_string(i) + " sums to " + std::to_string(row_hits));
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (column_hits[t] != 1) {
      throw InputError("assignment column " + std::to_string(t + 1) + " sums to " + std::to_string(column_hits[t]));
    }
  }

  AssignmentCheck check;
  check.sequence = InstallSequence(order);
  check.cost = sequence_cost(g, f, check.sequence);

  const IpModel model = build_ip(g, f);
  std::vector<std::size_t> position(n);
  for (std::size_t t = 0; t < n; ++t) position[order[t]] = t;
  std::vector<double> point(model.variables.size(), 0.0);
  for (NodeId i = 0; i < n; ++i) point[model.x_var(i, position[i] + 1)] = 1.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g.neighbors(i)) point[model.e_var(i, j)] = position[i] < position[j] ? 1.0 : 0.0;
  }
  for (NodeId j = 0; j < n; ++j) {
    double earlier = 0.0;
    for (NodeId i : g.neighbors(j)) earlier += point[model.e_var(i, j)];
    const double floor_value = model.variables[model.c_var(j)].lower;
    point[model.c_var(j)] = std::max(floor_value, tangent_envelope(f, g.degree(j), earlier));
  }

  const double violation = model.max_violation(point);
  if (violation > 1e-9) {
    throw InvariantError("induced model point violates a constraint by " + lp_number(violation));
  }
  check.model_objective = model.objective_value(point);
  if (std::abs(check.model_objective - check.cost.total) > 1e-6) {
    throw InvariantError("model objective " + lp_number(check.model_objective) +
                         " differs from installation cost " + lp_number(check.cost.total));
  }
  return check;
}

}  // namespace nanip
