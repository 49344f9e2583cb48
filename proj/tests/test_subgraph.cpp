#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

using namespace ramsey;

namespace {

// Test-side oracle: does the (sorted) subset span a cycle visiting all its
// vertices? Checked by brute permutation, independent of the library path.
bool oracleSpansCycle(const Graph& g, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  std::vector<int> perm(subset.begin() + 1, subset.end());
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = g.hasEdge(subset[0], perm.front()) && g.hasEdge(subset[0], perm.back());
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.hasEdge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Lexicographically least l-subset spanning a cycle, by full enumeration.
std::vector<int> oracleLeastCycleSet(const Graph& g, int l) {
  int n = g.vertexCount();
  std::vector<int> comb(l);
  std::vector<int> best;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + l, true);
  std::vector<std::vector<int>> all;
  do {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    all.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(all.begin(), all.end());
  for (const auto& s : all)
    if (oracleSpansCycle(g, s)) return s;
  return {};
}

Graph randomGraph(std::mt19937& rng, int n, int denomIn3) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 3) < denomIn3) g.addEdge(u, v);
  return g;
}

}  // namespace

TEST_CASE("containsTarget cliques") {
  auto w = containsTarget(completeGraph(4), Target::clique(4));
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});

  CHECK(!containsTarget(cycleGraph(5), Target::clique(3)).has_value());

  // Least witness: K_4 on {1,2,3,4} inside a 5-vertex graph.
  Graph g(5);
  for (int u = 1; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.addEdge(u, v);
  g.addEdge(0, 1);
  auto w4 = containsTarget(g, Target::clique(3));
  REQUIRE(w4.has_value());
  CHECK(w4->vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("containsTarget cycles on the Petersen graph") {
  Graph p = petersenGraph();
  // Exhaustive 5-subset oracle: girth is 5 and the least witness matches.
  CHECK(oracleLeastCycleSet(p, 3).empty());
  CHECK(oracleLeastCycleSet(p, 4).empty());
  std::vector<int> least5 = oracleLeastCycleSet(p, 5);
  REQUIRE(!least5.empty());

  CHECK(!containsTarget(p, Target::cycle(3)).has_value());
  CHECK(!containsTarget(p, Target::cycle(4)).has_value());
  auto w = containsTarget(p, Target::cycle(5));
  REQUIRE(w.has_value());
  CHECK(w->vertices == least5);
  CHECK(p.girth() == 5);

  auto w6 = containsTarget(p, Target::cycle(6));
  REQUIRE(w6.has_value());
  CHECK(w6->vertices == oracleLeastCycleSet(p, 6));
}

TEST_CASE("girth bounds shorter cycles") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Graph g = randomGraph(rng, 4 + static_cast<int>(rng() % 5), 1);
    auto gr = g.girth();
    if (!gr) continue;
    for (int l = 3; l < *gr; ++l) CHECK(!hasCycle(g, l));
    CHECK(hasCycle(g, *gr));
  }
}

TEST_CASE("clique monotonicity under supergraphs") {
  std::mt19937 rng(23);
  for (int it = 0; it < 60; ++it) {
    Graph g = randomGraph(rng, 7, 1);
    if (!hasClique(g, 3)) continue;
    Graph super = g;
    for (int extra = 0; extra < 3; ++extra) {
      int u = static_cast<int>(rng() % 7), v = static_cast<int>(rng() % 7);
      if (u != v) super.addEdge(u, v);
    }
    CHECK(hasClique(super, 3));
  }
}

TEST_CASE("tree embedding") {
  CHECK(hasTree(pathGraph(5), pathGraph(3)));
  CHECK(hasTree(starGraph(4), starGraph(3)));
  CHECK(!hasTree(pathGraph(5), starGraph(3)));  // max degree 2 hosts no 3-star
  CHECK(hasTree(completeGraph(4), pathGraph(4)));
  CHECK(!hasTree(completeGraph(3), pathGraph(4)));  // too few vertices

  auto w = containsTarget(pathGraph(4), Target::tree(pathGraph(3)));
  REQUIRE(w.has_value());
  CHECK(w->edges.size() == 2);
  for (const Edge& e : w->edges) CHECK(pathGraph(4).hasEdge(e.u, e.v));
}

TEST_CASE("commonCliqueVertex small cases") {
  Graph edge(2);
  edge.addEdge(0, 1);
  CHECK(commonCliqueVertex(edge, 3) == 0);

  CHECK(commonCliqueVertex(pathGraph(3), 3) == 1);  // edges ab, bc meet in b

  // Precondition violations are reported distinctly.
  CHECK_THROWS_AS(commonCliqueVertex(completeGraph(4), 3), PreconditionError);   // too many vertices
  CHECK_THROWS_AS(commonCliqueVertex(emptyGraph(3), 3), PreconditionError);      // no K_2
  CHECK_THROWS_AS(commonCliqueVertex(completeGraph(3), 3), PreconditionError);   // not K_3-free
}

TEST_CASE("clique-intersection lemma replay, exhaustive") {
  // t = 3: every graph on < 4 vertices containing K_2 and K_3-free.
  for (int n = 1; n <= 3; ++n) {
    int cells = n * (n - 1) / 2;
    for (int code = 0; code < (1 << cells); ++code) {
      Graph g(n);
      int bitIdx = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bitIdx)
          if (code & (1 << bitIdx)) g.addEdge(u, v);
      if (!hasClique(g, 2) || hasClique(g, 3)) continue;
      CHECK_NOTHROW(commonCliqueVertex(g, 3));
    }
  }
  // t = 4: all 1024 labeled graphs on 5 vertices containing K_3, K_4-free.
  int checked = 0;
  for (int code = 0; code < 1024; ++code) {
    Graph g(5);
    int bitIdx = 0;
    for (int v = 1; v < 5; ++v)
      for (int u = 0; u < v; ++u, ++bitIdx)
        if (code & (1 << bitIdx)) g.addEdge(u, v);
    if (!hasClique(g, 3) || hasClique(g, 4)) continue;
    CHECK_NOTHROW(commonCliqueVertex(g, 4));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("allCliques ordering") {
  Graph g = completeGraph(4);
  auto triangles = allCliques(g, 3);
  REQUIRE(triangles.size() == 4);
  CHECK(triangles.front() == std::vector<int>{0, 1, 2});
  CHECK(std::is_sorted(triangles.begin(), triangles.end()));
}
