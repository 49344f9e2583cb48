#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

using namespace ramsey;

TEST_CASE("edge normalization and canonical edge order") {
  Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);

  Graph g(4);
  g.addEdge(3, 1);
  g.addEdge(0, 2);
  g.addEdge(2, 1);
  auto edges = g.edges();
  REQUIRE(edges.size() == 3);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges[0] == Edge{0, 2});
  CHECK(edges[1] == Edge{1, 2});
  CHECK(edges[2] == Edge{1, 3});
}

TEST_CASE("adjacency stays symmetric and loop-free") {
  Graph g(5);
  g.addEdge(0, 1);
  g.addEdge(0, 1);  // duplicate ignored
  CHECK(g.edgeCount() == 1);
  CHECK(g.hasEdge(1, 0));
  CHECK_THROWS(g.addEdge(2, 2));
  g.removeEdge(1, 0);
  CHECK(g.edgeCount() == 0);
}

TEST_CASE("girth") {
  CHECK(cycleGraph(7).girth() == 7);
  CHECK(!pathGraph(6).girth().has_value());
  CHECK(completeGraph(4).girth() == 3);
  CHECK(petersenGraph().girth() == 5);
  CHECK(completeMultipartite({2, 2}).girth() == 4);
}

TEST_CASE("edgeDistance") {
  Graph path = pathGraph(4);  // a-b-c-d
  CHECK(path.edgeDistance(Edge{0, 1}, Edge{2, 3}) == 1);
  CHECK(path.edgeDistance(Edge{0, 1}, Edge{0, 1}) == 0);
  CHECK(path.edgeDistance(Edge{0, 1}, Edge{1, 2}) == 0);  // shared vertex

  Graph two(4);
  two.addEdge(0, 1);
  two.addEdge(2, 3);
  CHECK(!two.edgeDistance(Edge{0, 1}, Edge{2, 3}).has_value());
  CHECK_THROWS(two.edgeDistance(Edge{0, 2}, Edge{2, 3}));

  // Symmetry in the two edge arguments, on random connected-ish graphs.
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (rng() % 3 == 0) g.addEdge(u, v);
    auto edges = g.edges();
    if (edges.size() < 2) continue;
    Edge a = edges[rng() % edges.size()];
    Edge b = edges[rng() % edges.size()];
    CHECK(g.edgeDistance(a, b) == g.edgeDistance(b, a));
  }
}

TEST_CASE("induced subgraph and disjoint append") {
  Graph g = completeGraph(5);
  Graph sub = g.inducedSubgraph({0, 2, 4});
  CHECK(sub.vertexCount() == 3);
  CHECK(sub.edgeCount() == 3);

  Graph h = pathGraph(3);
  int off = h.appendDisjoint(cycleGraph(3));
  CHECK(off == 3);
  CHECK(h.vertexCount() == 6);
  CHECK(h.edgeCount() == 2 + 3);
  CHECK(h.hasEdge(3, 4));
  CHECK(!h.hasEdge(2, 3));
}

TEST_CASE("graph6 known values") {
  // Reference strings produced independently with networkx.to_graph6_bytes.
  CHECK(writeGraph6(completeGraph(5)) == "D~{");
  CHECK(writeGraph6(cycleGraph(5)) == "Dhc");
  CHECK(writeGraph6(petersenGraph()) == "IheA@GUAo");
  CHECK(writeGraph6(emptyGraph(0)) == "?");
  CHECK(writeGraph6(emptyGraph(1)) == "@");
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng() % 70);  // crosses the 62-vertex header boundary
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.addEdge(u, v);
    Graph back = readGraph6(writeGraph6(g));
    CHECK(back == g);
  }
  CHECK(readGraph6(">>graph6<<D~{") == completeGraph(5));
  CHECK_THROWS(readGraph6(""));
  CHECK_THROWS(readGraph6("D~"));    // truncated
  CHECK_THROWS(readGraph6("D~{{"));  // trailing data
}

TEST_CASE("petersen structure") {
  Graph p = petersenGraph();
  CHECK(p.vertexCount() == 10);
  CHECK(p.edgeCount() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(p.isConnected());
}
