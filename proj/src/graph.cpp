#include "nanip/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "nanip/error.hpp"

namespace nanip {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(num_nodes);
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a node outside 0.." +
                       std::to_string(num_nodes == 0 ? 0 : num_nodes - 1));
    }
    if (u == v) throw InputError("self-loop on node " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
    g.max_degree_ = std::max(g.max_degree_, nbrs.size());
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<std::uint64_t> parse_id(std::string_view token) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

// Recognizes the "# nodes N" header comment.
std::optional<std::uint64_t> node_count_directive(std::string_view comment) {
  std::istringstream ss{std::string(comment.substr(1))};
  std::string keyword, count, extra;
  if (!(ss >> keyword >> count) || keyword != "nodes" || (ss >> extra)) return std::nullopt;
  return parse_id(count);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared_nodes;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto count = node_count_directive(line)) {
        if (declared_nodes && *declared_nodes != *count) fail_at(line_no, "conflicting node count");
        declared_nodes = count;
      }
      continue;
    }
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b)) fail_at(line_no, "expected two node ids");
    if (ss >> extra) fail_at(line_no, "unexpected token '" + extra + "'");
    const auto u = parse_id(a);
    const auto v = parse_id(b);
    if (!u) fail_at(line_no, "invalid node id '" + a + "'");
    if (!v) fail_at(line_no, "invalid node id '" + b + "'");
    if (*u == *v) fail_at(line_no, "self-loop on node " + a);
    if (std::max(*u, *v) > UINT32_MAX - 1) fail_at(line_no, "node id too large");
    max_id = std::max({max_id, *u, *v});
    any_edge = true;
    edges.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
  }

  std::size_t n = any_edge ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (declared_nodes) {
    if (any_edge && max_id >= *declared_nodes) {
      throw InputError("node id " + std::to_string(max_id) + " exceeds declared node count " +
                       std::to_string(*declared_nodes));
    }
    n = static_cast<std::size_t>(*declared_nodes);
  }
  Graph g = Graph::from_edges(n, edges);
  if (!declared_nodes) {
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) {
        throw InputError("node id " + std::to_string(v) +
                         " never appears; ids must be dense (declare '# nodes N' for isolated nodes)");
      }
    }
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.num_nodes() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace nanip
