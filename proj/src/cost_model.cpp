#include "nanip/cost_model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "nanip/error.hpp"

namespace nanip {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw InputError(std::string(what) + " must be finite");
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CostFunction CostFunction::table(std::vector<double> values) {
  if (values.empty()) throw InputError("cost table must hold at least f(0)");
  for (std::size_t k = 0; k < values.size(); ++k) {
    require_finite(values[k], "cost table entry");
    if (values[k] < 0.0) throw InputError("cost table entry f(" + std::to_string(k) + ") is negative");
  }
  return CostFunction(Kind::table, 0.0, 0.0, std::move(values));
}

CostFunction CostFunction::reciprocal(double a) {
  require_finite(a, "reciprocal scale");
  if (a < 0.0) throw InputError("reciprocal scale must be nonnegative");
  return CostFunction(Kind::reciprocal, a, 0.0, {});
}

CostFunction CostFunction::linear(double a, double b) {
  require_finite(a, "linear slope");
  require_finite(b, "linear intercept");
  if (b < 0.0) throw InputError("linear cost must satisfy f(0) = b >= 0");
  return CostFunction(Kind::linear, a, b, {});
}

CostFunction CostFunction::indicator() { return CostFunction(Kind::indicator, 0.0, 0.0, {}); }

std::optional<std::size_t> CostFunction::max_argument() const {
  if (kind_ == Kind::table) return values_.size() - 1;
  return std::nullopt;
}

bool CostFunction::covers(std::size_t k) const {
  if (kind_ == Kind::table) return k < values_.size();
  if (kind_ == Kind::linear) return a_ * static_cast<double>(k) + b_ >= 0.0;
  return true;
}

double CostFunction::operator()(std::size_t k) const {
  switch (kind_) {
    case Kind::table:
      if (k >= values_.size()) {
        throw InputError("cost table covers 0.." + std::to_string(values_.size() - 1) +
                         " but f(" + std::to_string(k) + ") was requested");
      }
      return values_[k];
    case Kind::reciprocal:
      return a_ / (1.0 + static_cast<double>(k));
    case Kind::linear: {
      const double v = a_ * static_cast<double>(k) + b_;
      if (v < 0.0) throw InputError("linear cost is negative at k = " + std::to_string(k));
      return v;
    }
    case Kind::indicator:
      return k == 0 ? 0.0 : 1.0;
  }
  return 0.0;
}

double CostFunction::interpolate(double q) const {
  if (!(q >= 0.0)) throw InputError("interpolation argument must be nonnegative");
  if (auto d = max_argument(); d && q > static_cast<double>(*d)) {
    throw InputError("interpolation argument exceeds cost domain 0.." + std::to_string(*d));
  }
  const double lo = std::floor(q);
  const auto k = static_cast<std::size_t>(lo);
  const double frac = q - lo;
  const double f_lo = (*this)(k);
  if (frac == 0.0) return f_lo;
  return f_lo + frac * ((*this)(k + 1) - f_lo);
}

std::vector<double> CostFunction::tabulate(std::size_t max_arg) const {
  std::vector<double> out(max_arg + 1);
  for (std::size_t k = 0; k <= max_arg; ++k) out[k] = (*this)(k);
  return out;
}

std::string CostFunction::describe() const {
  switch (kind_) {
    case Kind::table: {
      std::string s = "table:[";
      for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) s += ',';
        s += format_real(values_[k]);
      }
      return s + "]";
    }
    case Kind::reciprocal:
      return "reciprocal:" + format_real(a_);
    case Kind::linear:
      return "linear:" + format_real(a_) + "," + format_real(b_);
    case Kind::indicator:
      return "indicator";
  }
  return {};
}

bool is_decreasing(const CostFunction& f, std::size_t max_arg) {
  if (!f.covers(max_arg)) return false;
  const auto v = f.tabulate(max_arg);
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k + 1] > v[k]) return false;
  }
  return true;
}

bool is_decreasing_convex(const CostFunction& f, std::size_t max_arg) {
  if (!is_decreasing(f, max_arg)) return false;
  const auto v = f.tabulate(max_arg);
  // Drops must not grow; a relative slack absorbs rounding in closed forms.
  for (std::size_t k = 0; k + 2 < v.size(); ++k) {
    const double drop = v[k] - v[k + 1];
    const double next_drop = v[k + 1] - v[k + 2];
    if (next_drop > drop + 1e-12 * std::max(1.0, std::abs(v[k]))) return false;
  }
  return true;
}

namespace {

double parse_real(std::string_view token, std::string_view context) {
  std::string s(token);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InputError("invalid number '" + s + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

CostFunction parse_cost_table(std::istream& in) {
  std::vector<double> values;
  std::string token;
  while (in >> token) values.push_back(parse_real(token, "cost table"));
  return CostFunction::table(std::move(values));
}

CostFunction parse_cost_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "indicator") {
    if (colon != std::string_view::npos) throw InputError("indicator cost takes no arguments");
    return CostFunction::indicator();
  }
  if (colon == std::string_view::npos) {
    throw InputError("unknown cost spec '" + std::string(spec) +
                     "' (expected reciprocal:<a>, linear:<a>,<b>, indicator, table:<path>)");
  }
  if (kind == "reciprocal") return CostFunction::reciprocal(parse_real(args, "reciprocal cost"));
  if (kind == "linear") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw InputError("linear cost expects linear:<a>,<b>");
    return CostFunction::linear(parse_real(args.substr(0, comma), "linear cost"),
                                parse_real(args.substr(comma + 1), "linear cost"));
  }
  if (kind == "table") {
    // Inline "[v0,v1,...]" form is what describe() emits; otherwise a path.
    if (!args.empty() && args.front() == '[') {
      if (args.back() != ']') throw InputError("inline cost table must end with ']'");
      std::string body(args.substr(1, args.size() - 2));
      for (char& c : body) {
        if (c == ',') c = ' ';
      }
      std::istringstream in(body);
      return parse_cost_table(in);
    }
    std::ifstream in{std::string(args)};
    if (!in) throw InputError("cannot open cost table '" + std::string(args) + "'");
    return parse_cost_table(in);
  }
  throw InputError("unknown cost kind '" + std::string(kind) + "'");
}

void require_permutation(const InstallSequence& seq, std::size_t n) {
  if (seq.size() != n) {
    throw InputError("sequence has " + std::to_string(seq.size()) + " entries for a graph with " +
                     std::to_string(n) + " nodes");
  }
  std::vector<char> seen(n, 0);
  for (NodeId v : seq.order()) {
    if (v >= n) throw InputError("sequence names node " + std::to_string(v) + " outside the graph");
    if (seen[v]) throw InputError("sequence repeats node " + std::to_string(v));
    seen[v] = 1;
  }
}

std::vector<std::size_t> installed_neighbor_counts(const Graph& g, const InstallSequence& seq) {
  require_permutation(seq, g.num_nodes());
  std::vector<char> installed(g.num_nodes(), 0);
  std::vector<std::size_t> counts;
  counts.reserve(seq.size());
  for (NodeId v : seq.order()) {
    std::size_t r = 0;
    for (NodeId u : g.neighbors(v)) r += installed[u];
    counts.push_back(r);
    installed[v] = 1;
  }
  return counts;
}

void require_covers_degrees(const Graph& g, const CostFunction& f) {
  if (!f.covers(g.max_degree())) {
    throw InputError("cost function " + f.describe() + " does not cover 0.." +
                     std::to_string(g.max_degree()) + " (maximum degree)");
  }
}

CostReport sequence_cost(const Graph& g, const CostFunction& f, const InstallSequence& seq) {
  require_covers_degrees(g, f);
  CostReport report;
  report.r_values = installed_neighbor_counts(g, seq);
  report.node_costs.reserve(report.r_values.size());
  for (std::size_t r : report.r_values) {
    const double c = f(r);
    report.node_costs.push_back(c);
    report.total += c;
  }
  return report;
}

}  // namespace nanip
