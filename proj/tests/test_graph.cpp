#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "nanip/error.hpp"
#include "nanip/generators.hpp"
#include "nanip/graph.hpp"

using namespace nanip;
using namespace nanip::testing;

namespace {

std::string serialize(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

void check_handshake(const Graph& g) {
  std::size_t sum = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    sum += g.degree(v);
    REQUIRE(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    for (NodeId u : g.neighbors(v)) {
      REQUIRE(u != v);
      REQUIRE(g.has_edge(u, v));
    }
  }
  REQUIRE(sum == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("parse_edge_list builds graphs and collapses duplicates") {
  const Graph path = parse_edge_list("0 1\n1 2");
  CHECK(path.num_nodes() == 3);
  CHECK(path.num_edges() == 2);
  CHECK(path == path_graph(3));

  const Graph single = parse_edge_list("0 1\n0 1");
  CHECK(single.num_nodes() == 2);
  CHECK(single.num_edges() == 1);

  const Graph reversed = parse_edge_list("# comment\n\n1 0\n0 1\n");
  CHECK(reversed.num_edges() == 1);
}

TEST_CASE("parse_edge_list rejects bad lines with their line number") {
  CHECK_THROWS_WITH_AS(parse_edge_list("0 0"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 0"), doctest::Contains("self-loop"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 x\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n-1 2\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1 2\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("0\n"), doctest::Contains("line 1"), InputError);
}

TEST_CASE("node ids must be dense unless a node count is declared") {
  CHECK_THROWS_AS(parse_edge_list("0 2\n"), InputError);
  const Graph g = parse_edge_list("# nodes 5\n0 2\n");
  CHECK(g.num_nodes() == 5);
  CHECK(g.num_edges() == 1);
  CHECK(parse_edge_list("# nodes 4\n").num_nodes() == 4);
  CHECK_THROWS_AS(parse_edge_list("# nodes 2\n0 2\n"), InputError);
}

TEST_CASE("serialization writes sorted u < v edges and round-trips") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{3, 1}, {2, 0}, {1, 0}, {2, 3}});
  CHECK(serialize(g) == "# nodes 4\n0 1\n0 2\n1 3\n2 3\n");
  CHECK(parse_edge_list(serialize(g)) == g);
  const Graph isolated = empty_graph(3);
  CHECK(parse_edge_list(serialize(isolated)) == isolated);
}

TEST_CASE("degree_sequence") {
  using V = std::vector<std::size_t>;
  CHECK(degree_sequence(star_graph(3)) == V{1, 1, 1, 3});
  CHECK(degree_sequence(cycle_graph(4)) == V{2, 2, 2, 2});
  CHECK(degree_sequence(path_graph(3)) == V{1, 1, 2});
}

TEST_CASE("random trees") {
  CHECK_THROWS_AS(gen_random_tree(0, RngSeed{1}), InputError);
  const Graph one = gen_random_tree(1, RngSeed{1});
  CHECK(one.num_nodes() == 1);
  CHECK(one.num_edges() == 0);
  const Graph two = gen_random_tree(2, RngSeed{9});
  CHECK(two.edges() == std::vector<Edge>{{0, 1}});
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph t = gen_random_tree(8, RngSeed{s});
    CHECK(t.num_edges() == 7);
    CHECK(is_connected(t));
    check_handshake(t);
  }
}

TEST_CASE("Pruefer decoding is uniform over labeled trees on 4 nodes") {
  // Cayley: 4^2 = 16 labeled trees, each with probability 1/16.
  std::map<std::string, int> counts;
  const int draws = 32000;
  for (int s = 0; s < draws; ++s) counts[serialize(gen_random_tree(4, RngSeed{static_cast<std::uint64_t>(s)}))]++;
  CHECK(counts.size() == 16);
  const double expected = draws / 16.0;
  const double sd = std::sqrt(draws * (1.0 / 16) * (15.0 / 16));
  for (const auto& [tree, c] : counts) CHECK(std::abs(c - expected) < 5 * sd);
}

TEST_CASE("random connected graphs") {
  const Graph tri = gen_random_connected(3, 3, RngSeed{4});
  CHECK(tri.num_edges() == 3);
  const Graph tree = gen_random_connected(15, 14, RngSeed{4});
  CHECK(tree.num_edges() == 14);
  CHECK(is_connected(tree));
  CHECK_THROWS_AS(gen_random_connected(5, 3, RngSeed{0}), InputError);
  CHECK_THROWS_AS(gen_random_connected(5, 11, RngSeed{0}), InputError);

  // Covers both the rejection branch and the complement-enumeration branch.
  for (std::size_t m : {14u, 30u, 50u, 52u, 53u, 80u, 104u, 105u}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = gen_random_connected(15, m, RngSeed{s});
      CHECK(g.num_nodes() == 15);
      CHECK(g.num_edges() == m);
      CHECK(is_connected(g));
      check_handshake(g);
    }
  }
}

TEST_CASE("G(n, p)") {
  CHECK(gen_gnp(10, 0.0, RngSeed{1}).num_edges() == 0);
  CHECK(gen_gnp(10, 1.0, RngSeed{1}).num_edges() == 45);
  CHECK_THROWS_AS(gen_gnp(10, 1.5, RngSeed{1}), InputError);
  CHECK_THROWS_AS(gen_gnp(10, -0.1, RngSeed{1}), InputError);

  const double mean = 0.3 * 4950;
  const double sd = std::sqrt(4950 * 0.3 * 0.7);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = gen_gnp(100, 0.3, RngSeed{s});
    check_handshake(g);
    CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) < 4 * sd);
  }
}

TEST_CASE("generators are deterministic in the seed") {
  for (std::uint64_t s : {0ull, 7ull, 123456789ull}) {
    CHECK(serialize(gen_random_tree(20, RngSeed{s})) == serialize(gen_random_tree(20, RngSeed{s})));
    CHECK(serialize(gen_random_connected(15, 40, RngSeed{s})) ==
          serialize(gen_random_connected(15, 40, RngSeed{s})));
    CHECK(serialize(gen_gnp(30, 0.2, RngSeed{s})) == serialize(gen_gnp(30, 0.2, RngSeed{s})));
  }
  CHECK(serialize(gen_random_connected(15, 40, RngSeed{1})) != serialize(gen_random_connected(15, 40, RngSeed{2})));
}
