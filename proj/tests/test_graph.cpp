#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "cag/graph.hpp"

using namespace cag;
using namespace cag::test;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.order() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(1, 3));

  Graph k1 = parse_graph("p edge 1 0");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  // comments and duplicate edge lines
  Graph d = parse_graph("# a comment\np edge 3 2\ne 1 2\ne 1 2\n");
  CHECK(d.edge_count() == 1);
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph("p edge 3 1\ne 1 4\n"),
                       doctest::Contains("vertex 4 out of range"), parse_error);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("p banana 3 1\ne 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph(""), parse_error);
  CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), parse_error);  // count mismatch
}

TEST_CASE("serialize_graph emits sorted edges and round-trips") {
  CHECK(serialize_graph(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(serialize_graph(Graph(1)) == "p edge 1 0\n");

  std::mt19937_64 gen(42);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(gen() % 10);
    Graph g = random_graph(n, 0.5, gen());
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("all_pairs_distances matches hand-computed values") {
  CHECK(all_pairs_distances(path_graph(4)).at(1, 4) == 3);
  CHECK(all_pairs_distances(cycle_graph(6)).at(1, 4) == 3);
  Graph g = from_edges(3, {{1, 2}});
  CHECK(all_pairs_distances(g).at(1, 3) == DistanceMatrix::kUnreachable);
}

TEST_CASE("distance matrix invariants") {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(gen() % 7);
    Graph g = random_graph(n, 0.4, gen());
    DistanceMatrix dm = all_pairs_distances(g);
    for (int u = 1; u <= n; ++u) {
      CHECK(dm.at(u, u) == 0);
      for (int v = 1; v <= n; ++v) {
        CHECK(dm.at(u, v) == dm.at(v, u));
        CHECK((dm.at(u, v) == 1) == g.has_edge(u, v));
      }
    }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(cycle_graph(5)) == 2);
  CHECK(diameter(path_graph(4)) == 3);
  CHECK(diameter(from_edges(3, {{1, 2}})) == kInfiniteDiameter);
  CHECK(diameter(Graph(1)) == 0);
}

TEST_CASE("power examples") {
  CHECK(power(cycle_graph(5), 2) == complete_graph(5));
  CHECK(power(path_graph(4), 2) ==
        from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  std::mt19937_64 gen(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(2 + static_cast<int>(gen() % 6), 0.4, gen());
    CHECK(power(g, 1) == g);
  }
  CHECK_THROWS_AS(power(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("power monotonicity and stabilization") {
  for_all_graphs(5, /*connected_only=*/false, [](const Graph& g) {
    Graph prev = power(g, 1);
    for (int k = 2; k <= 5; ++k) {
      Graph cur = power(g, k);
      for (auto [u, v] : prev.edges()) CHECK(cur.has_edge(u, v));
      prev = cur;
    }
    if (is_connected(g) && g.order() >= 2) {
      int d = diameter(g);
      CHECK(power(g, d) == complete_graph(g.order()));
      CHECK(power(g, d + 2) == power(g, d));
    }
  });
}

TEST_CASE("power composition agrees with the BFS oracle") {
  std::mt19937_64 gen(11);
  int tested = 0;
  while (tested < 40) {
    int n = 2 + static_cast<int>(gen() % 6);  // n <= 7
    Graph g = random_graph(n, 0.45, gen());
    if (!is_connected(g)) continue;
    ++tested;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        Graph lhs = power(power(g, a), b);
        Graph rhs = power(g, a * b);
        for (auto [u, v] : lhs.edges()) CHECK(rhs.has_edge(u, v));
        // BFS oracle: edge uv in rhs iff d(u,v) <= a*b, which is the lhs rule
        DistanceMatrix dm = all_pairs_distances(g);
        for (int u = 1; u <= n; ++u)
          for (int v = u + 1; v <= n; ++v)
            CHECK(rhs.has_edge(u, v) == (dm.at(u, v) != DistanceMatrix::kUnreachable &&
                                         dm.at(u, v) <= a * b));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("random_graph") {
  CHECK(random_graph(5, 0.0, 1).edge_count() == 0);
  CHECK(random_graph(4, 1.0, 1) == complete_graph(4));
  CHECK(random_graph(8, 0.4, 7) == random_graph(8, 0.4, 7));
  CHECK_THROWS_AS(random_graph(4, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(4, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("enumerate_graphs counts") {
  auto count = [](int n, bool conn) {
    GraphEnumerator en(n, conn);
    int c = 0;
    while (en.next()) ++c;
    return c;
  };
  CHECK(count(2, false) == 2);
  CHECK(count(3, false) == 8);
  CHECK(count(3, true) == 4);
  CHECK(count(4, false) == 64);
  CHECK_THROWS_AS(GraphEnumerator(7, false), cap_exceeded);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  GraphEnumerator a(4, false), b(4, false);
  std::set<std::string> seen;
  while (auto g = a.next()) {
    auto h = b.next();
    REQUIRE(h.has_value());
    CHECK(*g == *h);
    CHECK(seen.insert(serialize_graph(*g)).second);
  }
  CHECK(!b.next().has_value());
}
