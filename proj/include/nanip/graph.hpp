#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace nanip {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph on nodes 0..n-1. Adjacency lists are sorted
// ascending and the graph is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // collapse to one; self-loops and out-of-range ids throw InputError.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }
  bool has_edge(NodeId u, NodeId v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
  std::size_t max_degree_ = 0;
};

// Node degrees sorted ascending (d_1 <= ... <= d_n).
std::vector<std::size_t> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' comment lines, blank lines
// ignored. A "# nodes N" comment declares the node count explicitly so that
// isolated nodes survive a round trip; without it the graph spans
// 0..max_id and every id in that range must appear in some edge.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Writes the "# nodes N" header followed by edges u < v in sorted order.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace nanip
